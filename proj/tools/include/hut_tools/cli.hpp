#pragma once

#include <iosfwd>

namespace hut::tools {

// Process exit codes.
enum ExitCode : int { kFeasible = 0, kInfeasible = 1, kUsage = 2, kVerificationFailure = 3 };

// Runs the `hut` command line; reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hut::tools
