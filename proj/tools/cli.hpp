#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewbisub::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolated = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewbisub::cli
