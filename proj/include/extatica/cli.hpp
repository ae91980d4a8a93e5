#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extatica::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kHypothesisNotMet = 3,
  kResourceGuard = 4,
};

/// Runs one command line (without the program name). Writes a single JSON
/// object to `out` on success and {"error": ...} to `err` otherwise.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace extatica::cli
