#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "app/config.hpp"
#include "common/error.hpp"

namespace jetvar {

struct CommandOptions {
  bool compare_background = false;
  std::uint64_t seed = 1;
};

struct CommandOutput {
  int exit_code = 0;   // 0 every check passed, 1 a check failed
  std::string text;    // screen text, long blocks truncated
  std::string dump;    // same document without truncation
};

/// Lines per block before the screen text is truncated.
inline constexpr std::size_t kScreenLines = 40;

const std::vector<std::string>& command_names();
bool command_needs_config(const std::string& name);

/// Runs one command. Configuration and usage problems (ConfigError,
/// InvalidArgument, JetOrderExceeded, ...) and TermLimitExceeded propagate
/// as exceptions; verification failures become FAIL blocks.
CommandOutput run_command(const std::string& name, const std::optional<RunConfig>& cfg, const CommandOptions& opt);

/// Maps an error code to the process exit code: 1 verification, 2
/// configuration or usage, 3 term limit.
int exit_code_for(ErrorCode code);

}  // namespace jetvar
