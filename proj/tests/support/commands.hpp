#pragma once

#include <string>
#include <vector>

namespace testing_support {

struct CommandRun {
    std::string out;
    std::string err;
    int code = 0;
};

/// run_command with SUPERCOHOM_THREADS set to `threads` (0 leaves the environment alone).
CommandRun run_cli(const std::vector<std::string>& args, unsigned threads = 0);

std::string fixture_path(const std::string& name);

/// Every subcommand against every shipped fixture, with all declared cochains, deformations,
/// candidates and modules. `heavy` adds the degree-2 and classification runs on the super-Poincare fixture.
std::vector<std::vector<std::string>> fixture_commands(bool heavy);

/// Runs each command under 1 and 4 threads, twice each, in text and JSON; returns one line per
/// command whose output or exit code differs between runs.
std::vector<std::string> determinism_failures(const std::vector<std::vector<std::string>>& commands);

} // namespace testing_support
