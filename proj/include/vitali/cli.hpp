#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vitali::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kContractViolation = 2,
  kCapExceeded = 3,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vitali::cli
