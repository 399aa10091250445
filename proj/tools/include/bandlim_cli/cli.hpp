#pragma once

#include <iosfwd>

namespace bandlim::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kIntegrity = 3,
};

/// Parses argv, runs one subcommand and returns the process exit code.
/// CSV goes to `out` unless --out names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bandlim::cli
