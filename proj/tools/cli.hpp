#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace secmin::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Parses `args` (without the program name) and runs one command. Stable
/// records go to `out`, followed by a trailing "# elapsed_ms=" line; error
/// messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for an exception escaping a command: theorem violations fail,
/// every other library error is a usage or precondition error.
int exit_code_of(const std::exception& e);

}  // namespace secmin::cli
