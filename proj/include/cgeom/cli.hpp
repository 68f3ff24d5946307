#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgeom::cli {

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kSolverStalled = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and the verify summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgeom::cli
