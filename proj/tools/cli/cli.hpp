#pragma once

#include <ostream>

namespace steklov::cli {

/// Exit codes of the steklov tool.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kValidationFailure = 2,
  kNumericFailure = 3,
  kParameterFailure = 4,
};

/// Entry point of the command-line tool; writes results to `out` and
/// diagnostics to `err` and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
