#pragma once

#include <iosfwd>

namespace qcascade {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

// Entry point shared by the `qcascade` binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcascade
