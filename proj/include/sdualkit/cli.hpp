#pragma once

// The `sdualkit` command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace sdualkit {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_parse_error = 2, exit_unsupported = 3 };

/// args excludes the program name. `in` feeds `-` inputs and the repl.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace sdualkit
