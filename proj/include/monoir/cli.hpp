#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoir {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitResourceCap = 3,
};

/// Runs one subcommand. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoir
