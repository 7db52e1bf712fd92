#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace meanwidth::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kConvergence = 4,
};

/// Runs the command-line tool on `args` (without the program name), writing
/// records to `out` and diagnostics to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meanwidth::cli
