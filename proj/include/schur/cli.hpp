#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schur {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSyntax = 1,
  kExitCapacity = 2,
  kExitIllDefinedAmalgam = 3,
  kExitInvalidInput = 4,
  kExitOracleDisagrees = 5,
  kExitUsage = 64,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur
