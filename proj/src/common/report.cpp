#include "common/report.hpp"

namespace jetvar {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

std::string VerificationReport::serialize(std::size_t max_residual_lines) const {
  std::string out = "check " + check + "\n";
  out += "status " + std::string(status_name(status)) + "\n";
  for (const auto& [name, n] : counts) out += "count " + name + " " + std::to_string(n) + "\n";
  for (const auto& note : notes) out += "note " + note + "\n";
  out += "residual-terms " + std::to_string(residual.size()) + "\n";
  std::size_t shown = residual.size();
  if (max_residual_lines && shown > max_residual_lines) shown = max_residual_lines;
  for (std::size_t i = 0; i < shown; ++i) out += "  " + residual[i] + "\n";
  if (shown < residual.size())
    out += "  ... " + std::to_string(residual.size() - shown) + " more terms (use --dump)\n";
  return out;
}

}  // namespace jetvar
