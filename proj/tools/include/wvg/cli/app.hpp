#pragma once

#include <iosfwd>

namespace wvg::cli {

/// Process exit codes of the wvg tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParse = 2,
  kExitInvariant = 3,
  kExitEmptyPolytope = 4,
  kExitBadConstruction = 5,
};

/// Runs the command line with output on the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wvg::cli
