#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace augtwist {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< anomaly, lost trace or failed check
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace augtwist
