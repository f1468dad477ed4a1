#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexmod {

/// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kInputError = 1, kInternalError = 2, kViolation = 3 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace alexmod
