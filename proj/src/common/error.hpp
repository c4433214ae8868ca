#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetvar {

enum class ErrorCode {
  CyclicSubstitution,
  JetOrderExceeded,
  IndexOutOfRange,
  TermLimitExceeded,
  AntisymmetryViolation,
  JacobiViolation,
  SymmetryViolation,
  InvariantViolation,
  NotClosed,
  NonzeroResidual,
  SigmaMismatch,
  NotInvariant,
  ParseError,
  ConfigError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}
  ErrorCode code() const noexcept { return code_; }
  /// The message without the code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Global cap on the number of monomials any single expression may hold.
// Exceeding it raises TermLimitExceeded.
std::uint64_t max_terms();
void set_max_terms(std::uint64_t cap);
void check_term_count(std::size_t count);

}  // namespace jetvar
