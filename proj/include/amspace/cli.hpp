#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amspace::cli {

inline constexpr int kExitMember = 0;
inline constexpr int kExitNonMember = 1;
inline constexpr int kExitBoundary = 2;
inline constexpr int kExitError = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amspace::cli
