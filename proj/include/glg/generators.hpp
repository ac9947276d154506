#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "glg/graph.hpp"
#include "glg/rng.hpp"

namespace glg {

/// Path 0-1-...-(n-1). n = 1 gives the isolated vertex.
inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n >= 1 required");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n >= 1 required");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Star with center 0 and n-1 leaves.
inline Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("make_star: n >= 1 required");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

/// Cycle 0-1-...-(n-1)-0. Degenerates for n < 3: a single vertex for
/// n = 1, a single edge for n = 2.
inline Graph make_cycle(int n) {
    if (n < 1) throw std::invalid_argument("make_cycle: n >= 1 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (i != j && !g.has_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

/// Grid of width x height cells with the Moore (8-cell) neighborhood:
/// cells at Chebyshev distance 1 are adjacent. Cell (x, y) is vertex
/// y*width + x. With wrap, coordinates are taken modulo the grid size,
/// which needs width, height >= 3 so all 8 neighbor offsets stay distinct.
inline Graph make_grid(int width, int height, bool wrap) {
    if (width < 1 || height < 1) throw std::invalid_argument("make_grid: degenerate size");
    if (wrap && (width < 3 || height < 3))
        throw std::invalid_argument("make_grid: wrap requires width >= 3 and height >= 3");
    Graph g(width * height);
    auto id = [width](int x, int y) { return y * width + x; };
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int nx = x + dx, ny = y + dy;
                    if (wrap) {
                        nx = (nx + width) % width;
                        ny = (ny + height) % height;
                    } else if (nx < 0 || nx >= width || ny < 0 || ny >= height) {
                        continue;
                    }
                    int u = id(x, y), v = id(nx, ny);
                    if (u < v) g.add_edge(u, v); // each pair seen from both ends; add once
                }
            }
        }
    }
    return g;
}

/// Uniform G(n, m): exactly m edges, sampled as m distinct colex pair
/// indices via a partial Fisher-Yates shuffle (rejection-free, so the
/// distribution over edge sets is exactly uniform). Deterministic for a
/// fixed seed.
inline Graph random_gnm(int n, long m, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_gnm: negative n");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (m < 0 || static_cast<std::uint64_t>(m) > pairs)
        throw std::invalid_argument("random_gnm: m out of range [0, n(n-1)/2]");
    std::vector<std::uint64_t> idx(pairs);
    std::iota(idx.begin(), idx.end(), 0);
    SplitMix64 rng(seed);
    Graph g(n);
    for (long i = 0; i < m; ++i) {
        const std::uint64_t j = static_cast<std::uint64_t>(i) +
                                bounded(rng, pairs - static_cast<std::uint64_t>(i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        auto [u, v] = colex_pair(idx[static_cast<std::size_t>(i)]);
        g.add_edge(u, v);
    }
    return g;
}

} // namespace glg
