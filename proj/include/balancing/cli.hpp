#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace balancing::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,   // verification ran and found mismatches; the report is still written
  kUsage = 2,      // bad flags, malformed ranges, out-of-domain arguments
  kInternal = 3,   // an integrality assertion fired
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balancing::cli
