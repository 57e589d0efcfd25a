#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modtrace::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kBadInput = 2,
  kNumericFailure = 3,
};

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// (one JSON document with --json, aligned text otherwise); errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modtrace::cli
