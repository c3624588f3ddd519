#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohere::cli {

/// Exit codes: 0 success, 1 negative verdict under --strict, 2 any error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohere::cli
