#include "support/commands.hpp"

#include "supercohom/cli.hpp"
#include "supercohom/fixtures.hpp"

#include <cstdlib>
#include <sstream>

namespace testing_support {

using namespace supercohom;

CommandRun run_cli(const std::vector<std::string>& args, unsigned threads)
{
    if (threads > 0)
        setenv("SUPERCOHOM_THREADS", std::to_string(threads).c_str(), 1);
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    if (threads > 0)
        unsetenv("SUPERCOHOM_THREADS");
    return {out.str(), err.str(), code};
}

std::string fixture_path(const std::string& name)
{
    return std::string(SUPERCOHOM_FIXTURE_DIR) + "/" + name + ".json";
}

std::vector<std::vector<std::string>> fixture_commands(bool heavy)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& name : fixture_names()) {
        const std::string file = fixture_path(name);
        const Workspace w = load_workspace(file);
        const bool big = w.algebra->dim() > 10;
        out.push_back({"validate", file});
        std::vector<std::string> modules{kAdjoint};
        for (const auto& m : w.module_names())
            modules.push_back(m);
        for (const auto& m : modules) {
            for (int n = 0; n <= 2; ++n)
                if (n < 2 || !big || heavy)
                    out.push_back({"cohomology", file, "--n", std::to_string(n), "--module", m});
            out.push_back({"derivations", file, "--module", m});
        }
        out.push_back({"mc-check", file});
        for (const auto& [c, t] : w.candidates)
            out.push_back({"mc-check", file, "--candidate", c});
        for (const auto& [d, terms] : w.deformations) {
            out.push_back({"deform", "check", file, "--deformation", d});
            out.push_back({"deform", "check", file, "--deformation", d, "--strict"});
            out.push_back({"deform", "obstruct", file, "--deformation", d});
        }
        for (const auto& [c, nc] : w.cochains)
            if (nc.cochain.arity() == 2)
                out.push_back({"extend", file, "--cocycle", c});
        if (!big || heavy)
            out.push_back({"extend", "classify", file});
    }
    return out;
}

std::vector<std::string> determinism_failures(const std::vector<std::vector<std::string>>& commands)
{
    std::vector<std::string> failures;
    for (const auto& cmd : commands) {
        for (bool json : {false, true}) {
            std::vector<std::string> args = cmd;
            if (json)
                args.insert(args.begin(), {"--emit", "json"});
            const CommandRun first = run_cli(args, 1);
            for (unsigned threads : {4u, 1u, 4u}) {
                const CommandRun again = run_cli(args, threads);
                if (again.out != first.out || again.err != first.err || again.code != first.code) {
                    std::string line;
                    for (const auto& a : args)
                        line += a + " ";
                    failures.push_back(line + "(threads " + std::to_string(threads) + ")");
                    break;
                }
            }
        }
    }
    return failures;
}

} // namespace testing_support
