#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alia::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_fail = 1,   // a mathematical check failed or a construction's hypotheses do not hold
  exit_usage = 2,  // unreadable input, bad document, bad flags
  exit_internal = 3,
};

/// Runs one verb. `args` excludes the program name. The JSON report goes to
/// `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alia::cli
