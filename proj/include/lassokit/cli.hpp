#pragma once

#include <ostream>

namespace lassokit {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// Runs one command-line invocation, writing results to `out` and
/// diagnostics to `err`. Decision subcommands end with a machine-readable
/// line: `yes`, or `no` followed by the witness.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lassokit
