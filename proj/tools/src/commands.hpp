#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entroverify::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidationError = 2,
  kFailedTrials = 3,
};

/// Runs one command line (args excludes the program name). JSON results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entroverify::cli
