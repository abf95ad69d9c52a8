#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradedca::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kLimitExceeded = 3,
  kInvariantViolation = 4,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedca::cli
