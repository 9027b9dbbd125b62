#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace injgen::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,       // mathematical failure or refutation
  kInputError = 2,
  kInconclusive = 3,  // only with --strict
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace injgen::cli
