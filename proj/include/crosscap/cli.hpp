#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crosscap::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFinding = 2;  // a check failed, or the computation itself did

// Runs the command line `args` (args[0] is the program name) and returns the
// exit code. Subcommands: invariants, cf, verify, family.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscap::cli
