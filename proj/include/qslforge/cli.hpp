#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qslforge {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerification = 2,
  kExitNumerical = 3,
};

/// Runs the command line with `args` excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qslforge
