#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plaw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code: 0 verified, 1 identity violation, 2 input or
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plaw::cli
