// Enumerates the connected 5-vertex graphs, then finds the closest and
// farthest pairs under the feature-vector distance.
#include <iostream>
#include <vector>

#include "glg/glg.hpp"

using namespace glg;

int main() {
    std::vector<Graph> corpus;
    for (std::uint64_t code : enumeration::connected_graph_codes(5))
        corpus.push_back(enumeration::graph_from_code(5, code));
    std::cout << "connected graphs on 5 vertices: " << corpus.size() << '\n';

    const auto dist = distance_matrix(corpus, 2, false, 1);
    std::size_t ci = 0, cj = 1, fi = 0, fj = 1;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (dist[i][j] < dist[ci][cj]) ci = i, cj = j;
            if (dist[i][j] > dist[fi][fj]) fi = i, fj = j;
        }

    std::cout << "closest:  " << encode_graph6(corpus[ci]) << ' ' << encode_graph6(corpus[cj])
              << "  d=" << format_double(dist[ci][cj]) << '\n';
    std::cout << "farthest: " << encode_graph6(corpus[fi]) << ' ' << encode_graph6(corpus[fj])
              << "  d=" << format_double(dist[fi][fj]) << '\n';
    return 0;
}
