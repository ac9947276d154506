#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glg/bitset.hpp"
#include "glg/rng.hpp"

namespace glg {

/// Undirected simple graph on vertices {0..n-1} with the neighbor set of
/// each vertex held as a bit-set row. Rows stay symmetric and irreflexive
/// by construction: edges enter only through add_edge, which writes both
/// directions and rejects self-loops.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        rows_.assign(static_cast<std::size_t>(n), Bitset(n));
    }

    int n() const { return n_; }
    long m() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (rows_[u].test(v))
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        rows_[u].set(v);
        rows_[v].set(u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return rows_[u].test(v);
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return rows_[v].count();
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[v] = rows_[v].count();
        return d;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    long m_ = 0;
    std::vector<Bitset> rows_;
};

/// Bijection on {0..n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
        std::vector<char> seen(map_.size(), 0);
        for (int x : map_) {
            if (x < 0 || static_cast<std::size_t>(x) >= map_.size() || seen[x])
                throw std::invalid_argument("Permutation: not a bijection on {0..n-1}");
            seen[x] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    /// Fisher-Yates shuffle driven by SplitMix64 (reproducible draws).
    static Permutation random(int n, SplitMix64& rng) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            auto j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
            std::swap(v[i], v[j]);
        }
        return Permutation(std::move(v));
    }

    int operator()(int i) const { return map_.at(static_cast<std::size_t>(i)); }
    int size() const { return static_cast<int>(map_.size()); }

    Permutation inverse() const {
        std::vector<int> inv(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i)
            inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
        return Permutation(std::move(inv));
    }

private:
    std::vector<int> map_;
};

/// Relabels vertices: vertex u of g becomes vertex p(u) of the result, so
/// the output carries edge (p(u), p(v)) for every input edge (u, v).
inline Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.n())
        throw std::invalid_argument("apply_permutation: permutation length != vertex count");
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out.add_edge(p(u), p(v));
    return out;
}

/// Colex enumeration of unordered pairs: (0,1),(0,2),(1,2),(0,3),(1,3),...
/// Index k maps to the pair (u,v), u < v, with v(v-1)/2 <= k < v(v+1)/2.
/// This is also the bit order of the graph6 format.
inline std::pair<int, int> colex_pair(std::uint64_t k) {
    // Smallest v with v(v+1)/2 > k.
    auto v = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
    while (v * (v + 1) / 2 <= k) ++v;
    while (v > 0 && (v - 1) * v / 2 > k) --v;
    std::uint64_t u = k - v * (v - 1) / 2;
    return {static_cast<int>(u), static_cast<int>(v)};
}

inline std::uint64_t colex_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(v) * (static_cast<std::uint64_t>(v) - 1) / 2 +
           static_cast<std::uint64_t>(u);
}

/// BFS reachability from vertex 0; the empty graph counts as connected.
inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<int> stack{0};
    Bitset seen = Bitset::single(g.n(), 0);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.n(); ++u) {
            if (g.neighbors(v).test(u) && !seen.test(u)) {
                seen.set(u);
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.n();
}

} // namespace glg
