#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace immanants::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

/// Runs the command-line tool. `args` excludes the program name. Records go
/// to `out` (or the --out file), notices and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or "a" into an inclusive range. Throws std::invalid_argument.
std::pair<long, long> parse_range(const std::string& text);

}  // namespace immanants::cli
