// Corpus generator: exhaustive connected simple plane graphs (optionally
// restricted to the no-4-cycle, triangle-distance >= 2 class) plus seeded
// random plane graphs, emitted as planar_code.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "workbench/corpus.hpp"

int main(int argc, char** argv) {
    CLI::App app{"plane-graph corpus generator (planar_code output)"};
    int max_n = 0;
    bool class_only = false, no_header = false;
    std::string out_path;
    std::vector<std::string> random_specs;  // n:count
    unsigned long long seed = 1;

    app.add_option("--max-n", max_n, "exhaustive generation up to this vertex count");
    app.add_flag("--class-g", class_only, "keep only class members (no 4-cycles, d_tri >= 2)");
    app.add_option("--random", random_specs, "additional random graphs, n:count (repeatable)");
    app.add_option("--seed", seed, "random generator seed");
    app.add_flag("--no-header", no_header, "omit the >>planar_code<< header");
    app.add_option("-o,--output", out_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    if (!no_header) out << ">>planar_code<<";

    std::map<int, long long> counts;
    if (max_n > 0) {
        wb::generate_connected_plane_graphs(max_n, class_only, [&](const wb::PlaneGraph& g) {
            wb::emit_planar_code(out, g);
            ++counts[g.n()];
        });
    }
    std::mt19937_64 rng(seed);
    for (const std::string& spec : random_specs) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) {
            std::cerr << "bad --random spec (want n:count): " << spec << "\n";
            return 3;
        }
        int n = std::stoi(spec.substr(0, colon));
        int count = std::stoi(spec.substr(colon + 1));
        for (int i = 0; i < count; ++i) {
            auto g = wb::random_plane_graph(n, rng, class_only);
            if (!g) {
                std::cerr << "random generation stalled at n=" << n << "\n";
                return 1;
            }
            wb::emit_planar_code(out, *g);
            ++counts[n];
        }
    }
    for (auto [n, c] : counts) std::cout << "n=" << n << ": " << c << "\n";
    return 0;
}
