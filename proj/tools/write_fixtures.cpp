// Writes the shipped fixture workspaces as <dir>/<name>.json.
#include "supercohom/fixtures.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: write_fixtures DIR\n";
        return 2;
    }
    for (const auto& name : supercohom::fixture_names()) {
        const std::string path = std::string(argv[1]) + "/" + name + ".json";
        std::ofstream out(path, std::ios::binary);
        out << supercohom::serialize(supercohom::fixture(name));
        if (!out) {
            std::cerr << "cannot write " << path << '\n';
            return 1;
        }
    }
    return 0;
}
