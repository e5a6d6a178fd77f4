#pragma once

#include <ostream>

namespace svmc {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNonConvergence = 2, kExitMismatch = 3 };

// Subcommands: check, verify, enumerate. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace svmc
