#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinorbit::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kUnusableIon = 3,
  kIoError = 4,
};

/// Runs one command. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinorbit::cli
