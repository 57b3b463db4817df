#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercohom {

/// Exit statuses of run_command.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). The report goes to `out`, diagnostics to
/// `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace supercohom
