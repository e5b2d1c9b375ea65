#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morphic {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;  // a refuted report or a corpus mismatch
inline constexpr int kExitInput = 2;    // bad arguments, parse errors, cap overruns

/// Runs one command line (without the program name):
///   classify EXPR | verify EXPR [--theorem ID] | corpus [--max-order K]
///   | search [--max-order K] | qz --bound N
/// `--json` switches to one JSON object per line.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morphic
