#pragma once

#include <iosfwd>

namespace rank3 {

// Process exit codes of the rank3 tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitArity = 3,
  kExitFitRejected = 4,
  kExitMismatch = 5,
};

// Entry point of the rank3 tool; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rank3
