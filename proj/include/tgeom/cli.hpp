#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgeom::cli {

// Stable exit-code contract for scripting.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kViolations = 2,
  kNotEquivalent = 3,
  kNoSolution = 4,
  kLimitExceeded = 5,
};

// Runs one invocation. `args` excludes the program name. Command output is
// buffered and written once, to `out` or to the --out file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgeom::cli
