#include "common/error.hpp"

#include <atomic>

namespace jetvar {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CyclicSubstitution: return "CyclicSubstitution";
    case ErrorCode::JetOrderExceeded: return "JetOrderExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TermLimitExceeded: return "TermLimitExceeded";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NonzeroResidual: return "NonzeroResidual";
    case ErrorCode::SigmaMismatch: return "SigmaMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::atomic<std::uint64_t> g_max_terms{10'000'000};
}

std::uint64_t max_terms() { return g_max_terms.load(std::memory_order_relaxed); }

void set_max_terms(std::uint64_t cap) { g_max_terms.store(cap, std::memory_order_relaxed); }

void check_term_count(std::size_t count) {
  if (count > max_terms())
    throw Error(ErrorCode::TermLimitExceeded,
                std::to_string(count) + " monomials exceeds cap " + std::to_string(max_terms()));
}

}  // namespace jetvar
