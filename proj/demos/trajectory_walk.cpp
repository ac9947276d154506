// Runs a few single-seed games on named graphs and prints what happens.
#include <iostream>

#include "glg/glg.hpp"

using namespace glg;

static void report(const char* name, const Graph& g, int seed) {
    const Trajectory tr = simulate(g, single_vertex_pattern(g.n(), seed), {});
    std::cout << name << ", seed " << seed << ": ";
    for (std::size_t t = 0; t < tr.patterns.size(); ++t) {
        std::cout << (t ? " -> " : "") << '{';
        bool first = true;
        for (int v : tr.patterns[t].to_indices()) {
            std::cout << (first ? "" : ",") << v;
            first = false;
        }
        std::cout << '}';
    }
    if (tr.outcome == Outcome::Cycled)
        std::cout << "  cycles at " << tr.cycle_entry << ", complexity " << tr.complexity << '\n';
    else
        std::cout << "  dies at " << tr.died_at << ", complexity " << tr.complexity << '\n';
}

int main() {
    report("P5", make_path(5), 2);
    report("K5", make_complete(5), 0);
    report("star4", make_star(4), 1);
    report("C6", make_cycle(6), 0);
    return 0;
}
