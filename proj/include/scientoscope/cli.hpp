#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scientoscope {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 1 analysis/validation/golden failure, 2 input or
/// parse failure (including bad command-line usage).
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

/// Runs the command line given `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scientoscope
