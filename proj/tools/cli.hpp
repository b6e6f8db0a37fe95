#pragma once

#include <string>
#include <vector>

namespace icdual::cli {

/// Exit codes: 0 success or valid, 1 semantically invalid input (a code that
/// fails validation, an infeasible network, an inconsistent oracle sweep),
/// 2 malformed input, bad usage or a size limit.
struct CommandResult {
  int exit_code = 0;
  std::string text;      // human-readable report
  std::string document;  // machine-readable JSON; written to --json <path> when given
};

/// Runs one command line, without the program name.
[[nodiscard]] CommandResult run(const std::vector<std::string>& args);

}  // namespace icdual::cli
