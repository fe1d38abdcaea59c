#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "covercount/json_io.hpp"

namespace covercount {

/// Exit codes shared between the CLI and its tests.
enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 2,         // verification verdict FAIL
  kExitSolverError = 3,  // a trial aborted with a solver error
  kExitUsage = 64,
  kExitBadSpec = 65,     // malformed input or validation failure
};

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-executes the command stored in a journal record and returns the result
/// payload; used for reproducibility checks.
Json replay_record(const Json& record);

}  // namespace covercount
