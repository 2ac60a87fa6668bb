#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace facering::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // validation failure, oracle disagreement, library error
inline constexpr int kUsage = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facering::cli
