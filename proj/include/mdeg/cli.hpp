#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdeg::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,      // ran fine, answer is "no" (incomparable, no triangle, ...)
  kUsage = 2,         // bad arguments or malformed input files
  kCounterexample = 3 // a verification run found a counterexample
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdeg::cli
