#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoset::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kRangeError = 2,
  kParseError = 3,
  kIncomplete = 4,
};

/// Runs the isoset command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoset::cli
