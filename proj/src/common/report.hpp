#pragma once

#include <string>
#include <utility>
#include <vector>

namespace jetvar {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);

/// Outcome of one identity check. `residual` holds the canonical
/// serialization of whatever failed to cancel, one term per line; it is
/// empty exactly when the check passed.
struct VerificationReport {
  std::string check;
  Status status = Status::Pass;
  std::vector<std::string> residual;
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return status == Status::Pass; }

  static VerificationReport from_residual(std::string check, std::vector<std::string> residual) {
    VerificationReport r;
    r.check = std::move(check);
    r.status = residual.empty() ? Status::Pass : Status::Fail;
    r.residual = std::move(residual);
    return r;
  }

  /// "status PASS" line, counts and notes, then the residual block.
  /// At most `max_residual_lines` residual terms are shown (0 = all).
  std::string serialize(std::size_t max_residual_lines = 0) const;
};

}  // namespace jetvar
