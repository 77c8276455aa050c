// Command-line surface. Parsing and dispatch live behind run_cli so tests
// can drive the full tool in-process and capture its streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plethy {

/// Runs the tool on `args` (program name excluded), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code: 0 success,
/// 1 invalid input, 2 verification failure, 3 resource cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// argv form; argv[0] is skipped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plethy
