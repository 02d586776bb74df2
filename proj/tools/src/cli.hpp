#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lofs::cli {

enum ExitCode : int { ok = 0, predicate_false = 1, usage_error = 2, invalid_object = 3 };

/// Runs one command line (without the program name). JSON or DOT goes to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lofs::cli
