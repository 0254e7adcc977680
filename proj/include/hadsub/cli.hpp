#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hadsub {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerification = 2,
  kExitLimit = 3,
  kExitAmbiguous = 4,
};

/// Runs one CLI invocation; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0.7071rad", "0.25tau" (fraction of 2 pi) or a bare number (radians).
double parse_angle(const std::string& token);

}  // namespace hadsub
