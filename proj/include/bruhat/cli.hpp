#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bruhat {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitBoundExceeded = 3,
};

/// Entry point of the bruhat-atlas tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bruhat
