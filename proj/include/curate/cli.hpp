#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curate {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitInternal = 4,
};

/// Runs the `curate` command line. `args[0]` is the program name. Reports go
/// to files; human summaries go to `out`; failures print a single line
/// `error code=<Code> exit=<n>: <message>` to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curate
