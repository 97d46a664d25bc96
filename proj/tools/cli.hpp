#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace youngrep::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kLimitError = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`.  Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace youngrep::cli
