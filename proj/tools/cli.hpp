#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eoc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kGuardRefused = 3;

/// Runs the `eoc` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eoc::cli
