#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace largeprime {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

// Runs the tool with `args` (without the program name). Reports go to `out`
// (or to --out FILE), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace largeprime
