#pragma once

/// @file
/// @brief Command-line entry point: flag parsing and task orchestration.

#include <ostream>
#include <string>
#include <vector>

namespace cantus {

/// Process exit codes. Diagnose exits Ok whether or not the piece has
/// errors; error presence is data, not failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsatisfiable = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitBudget = 4;

/// @brief Run one task. ``args`` is the command line without the program
/// name. Returns the exit code; results go to ``out``, diagnostics to
/// ``err``.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

/// argc/argv convenience overload (skips argv[0]).
int runCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace cantus
