#pragma once

#include <iosfwd>

namespace prohecke {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitComputation = 3 };

// Runs the command-line interface; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prohecke
