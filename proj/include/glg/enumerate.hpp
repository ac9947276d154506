#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "glg/graph.hpp"
#include "glg/parallel.hpp"
#include "glg/rng.hpp"

namespace glg {

/// Isomorph-free generation of small graphs. Upper bound n <= 11 keeps the
/// upper-triangle mask (55 bits) and every adjacency row (uint16) in
/// machine words. Graphs are carried as packed colex masks: stream bit s
/// (graph6 bit order) sits at mask bit T-1-s, T = n(n-1)/2, so integer
/// order equals lexicographic order of the bit stream.
///
/// Canonical forms come from a branch-and-bound search for the minimal
/// mask over all vertex orderings. This is deliberately independent of the
/// feature-extraction pipeline: the corpora produced here are used to
/// judge that pipeline, so they must not be deduplicated by it.
namespace enumeration {

constexpr int kMaxVertices = 11;

inline void check_small(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("enumeration: n must be in [1, 11]");
}

inline int triangle_bits(int n) { return n * (n - 1) / 2; }

/// Packs adjacency rows into the colex mask.
inline std::uint64_t pack_rows(int n, const std::uint16_t* rows) {
    const int total = triangle_bits(n);
    std::uint64_t code = 0;
    for (int s = 0; s < total; ++s) {
        auto [u, v] = colex_pair(static_cast<std::uint64_t>(s));
        if ((rows[v] >> u) & 1u) code |= std::uint64_t{1} << (total - 1 - s);
    }
    return code;
}

inline void unpack_rows(int n, std::uint64_t code, std::uint16_t* rows) {
    const int total = triangle_bits(n);
    for (int v = 0; v < n; ++v) rows[v] = 0;
    for (int s = 0; s < total; ++s) {
        if ((code >> (total - 1 - s)) & 1u) {
            auto [u, v] = colex_pair(static_cast<std::uint64_t>(s));
            rows[u] |= static_cast<std::uint16_t>(1u << v);
            rows[v] |= static_cast<std::uint16_t>(1u << u);
        }
    }
}

namespace detail {

struct CanonSearch {
    int n = 0;
    const std::uint16_t* rows = nullptr;
    std::uint64_t best = ~std::uint64_t{0};
    int total_bits = 0;
    int perm[kMaxVertices] = {};

    /// depth = next position to fill; partial holds the columns placed so
    /// far, left-aligned at the low end (shifted up by each new column).
    void rec(int depth, std::uint16_t placed, std::uint64_t partial, int bits_used) {
        if (depth == n) {
            if (partial < best) best = partial;
            return;
        }
        if (depth > 0) {
            // Prune against the best complete code's prefix.
            const std::uint64_t best_prefix = best >> (total_bits - bits_used);
            if (partial > best_prefix) return;
        }

        // Column bits of each unplaced vertex against the placed prefix,
        // earliest placed vertex most significant.
        std::uint32_t col[kMaxVertices];
        std::uint32_t min_col = ~std::uint32_t{0};
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            std::uint32_t c = 0;
            for (int i = 0; i < depth; ++i)
                c = (c << 1) | ((rows[v] >> perm[i]) & 1u);
            col[v] = c;
            if (c < min_col) min_col = c;
        }

        int tried[kMaxVertices];
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            if (col[v] != min_col) continue;
            // Swapping twins is an automorphism; one branch suffices.
            bool twin = false;
            for (int t = 0; t < tried_count && !twin; ++t) {
                const int u = tried[t];
                const std::uint16_t both =
                    static_cast<std::uint16_t>((1u << u) | (1u << v));
                twin = static_cast<std::uint16_t>(rows[u] | both) ==
                       static_cast<std::uint16_t>(rows[v] | both);
            }
            if (twin) continue;
            tried[tried_count++] = v;
            perm[depth] = v;
            rec(depth + 1, static_cast<std::uint16_t>(placed | (1u << v)),
                (partial << depth) | min_col, bits_used + depth);
        }
    }
};

} // namespace detail

/// Minimal colex mask over all vertex orderings of the graph the rows
/// describe. Exact: explores every ordering that can still attain the
/// minimum (ties included), with twin branches collapsed.
inline std::uint64_t canonical_code_rows(int n, const std::uint16_t* rows) {
    check_small(n);
    if (n == 1) return 0;
    detail::CanonSearch search;
    search.n = n;
    search.rows = rows;
    search.total_bits = triangle_bits(n);
    search.rec(0, 0, 0, 0);
    return search.best;
}

inline std::uint64_t canonical_code(const Graph& g) {
    check_small(g.n());
    std::uint16_t rows[kMaxVertices] = {};
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < g.n(); ++u)
            if (u != v && g.has_edge(u, v)) rows[v] |= static_cast<std::uint16_t>(1u << u);
    return canonical_code_rows(g.n(), rows);
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    check_small(n);
    std::uint16_t rows[kMaxVertices];
    unpack_rows(n, code, rows);
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((rows[v] >> u) & 1u) g.add_edge(u, v);
    return g;
}

inline bool rows_connected(int n, const std::uint16_t* rows) {
    if (n <= 1) return true;
    std::uint16_t seen = 1;
    std::uint16_t frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= rows[v];
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= next;
    }
    return seen == static_cast<std::uint16_t>((1u << n) - 1);
}

/// Open-addressing set of packed codes. The all-ones word never occurs as
/// a code for n <= 11, so it serves as the empty-slot sentinel.
class CodeSet {
public:
    CodeSet() { slots_.assign(1u << 10, kEmpty); }

    bool insert(std::uint64_t x) {
        if (size_ * 10 >= slots_.size() * 7) grow();
        std::size_t i = static_cast<std::size_t>(mix64(x)) & (slots_.size() - 1);
        for (;;) {
            if (slots_[i] == kEmpty) {
                slots_[i] = x;
                ++size_;
                return true;
            }
            if (slots_[i] == x) return false;
            i = (i + 1) & (slots_.size() - 1);
        }
    }

    std::size_t size() const { return size_; }

    std::vector<std::uint64_t> extract_sorted() const {
        std::vector<std::uint64_t> out;
        out.reserve(size_);
        for (std::uint64_t s : slots_)
            if (s != kEmpty) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    void grow() {
        std::vector<std::uint64_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kEmpty);
        size_ = 0;
        for (std::uint64_t x : old)
            if (x != kEmpty) insert(x);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t size_ = 0;
};

using ProgressFn = std::function<void(int level, std::size_t done, std::size_t total)>;

/// Every graph on n vertices up to isomorphism, as sorted canonical codes.
/// Level n is built by attaching one vertex to every level n-1 graph in
/// all 2^(n-1) ways and deduplicating canonically; deleting the highest
/// vertex of any n-vertex graph lands in the complete level n-1 list, so
/// no class is missed.
inline std::vector<std::uint64_t> all_graph_codes(int n, int threads = 1,
                                                  const ProgressFn& progress = {}) {
    check_small(n);
    std::vector<std::uint64_t> level{0}; // the 1-vertex graph
    for (int size = 2; size <= n; ++size) {
        CodeSet set;
        std::mutex set_mutex;
        const std::size_t batch = 256;
        const std::size_t batches = (level.size() + batch - 1) / batch;
        std::atomic<std::size_t> done{0};
        parallel_for(batches, threads, [&](std::size_t b) {
            std::vector<std::uint64_t> local;
            local.reserve(batch << (size - 1));
            const std::size_t lo = b * batch;
            const std::size_t hi = std::min(level.size(), lo + batch);
            std::uint16_t rows[kMaxVertices];
            for (std::size_t p = lo; p < hi; ++p) {
                for (std::uint32_t mask = 0; mask < (1u << (size - 1)); ++mask) {
                    unpack_rows(size - 1, level[p], rows);
                    rows[size - 1] = static_cast<std::uint16_t>(mask);
                    for (int u = 0; u < size - 1; ++u)
                        if ((mask >> u) & 1u) rows[u] |= static_cast<std::uint16_t>(1u << (size - 1));
                    local.push_back(canonical_code_rows(size, rows));
                }
            }
            std::lock_guard<std::mutex> lock(set_mutex);
            for (std::uint64_t c : local) set.insert(c);
            if (progress) progress(size, done += (hi - lo), level.size());
        });
        level = set.extract_sorted();
    }
    return level;
}

inline std::vector<std::uint64_t> connected_graph_codes(int n, int threads = 1,
                                                        const ProgressFn& progress = {}) {
    auto codes = all_graph_codes(n, threads, progress);
    std::vector<std::uint64_t> out;
    out.reserve(codes.size());
    std::uint16_t rows[kMaxVertices];
    for (std::uint64_t c : codes) {
        unpack_rows(n, c, rows);
        if (rows_connected(n, rows)) out.push_back(c);
    }
    return out;
}

namespace detail {

inline void cubic_rec(int n, int v, std::uint16_t* rows, int* deg, CodeSet& found) {
    if (v == n) {
        if (rows_connected(n, rows)) found.insert(canonical_code_rows(n, rows));
        return;
    }
    const int need = 3 - deg[v];
    if (need < 0) return;
    if (need == 0) {
        cubic_rec(n, v + 1, rows, deg, found);
        return;
    }
    // Choose `need` forward neighbors with spare degree.
    int avail[kMaxVertices];
    int count = 0;
    for (int u = v + 1; u < n; ++u)
        if (deg[u] < 3) avail[count++] = u;
    if (count < need) return;

    int choice[3];
    auto choose = [&](auto&& self, int start, int picked) -> void {
        if (picked == need) {
            for (int c = 0; c < need; ++c) {
                const int u = choice[c];
                rows[v] |= static_cast<std::uint16_t>(1u << u);
                rows[u] |= static_cast<std::uint16_t>(1u << v);
                ++deg[v];
                ++deg[u];
            }
            cubic_rec(n, v + 1, rows, deg, found);
            for (int c = 0; c < need; ++c) {
                const int u = choice[c];
                rows[v] &= static_cast<std::uint16_t>(~(1u << u));
                rows[u] &= static_cast<std::uint16_t>(~(1u << v));
                --deg[v];
                --deg[u];
            }
            return;
        }
        for (int a = start; a <= count - (need - picked); ++a) {
            choice[picked] = avail[a];
            self(self, a + 1, picked + 1);
        }
    };
    choose(choose, 0, 0);
}

} // namespace detail

/// Connected 3-regular graphs on n vertices up to isomorphism. Every cubic
/// graph has an ordering whose first vertex is adjacent to exactly the
/// next three, so the search fixes N(0) = {1,2,3} and deduplicates
/// canonically.
inline std::vector<std::uint64_t> cubic_connected_codes(int n) {
    check_small(n);
    if (n < 4 || n % 2 != 0) return {};
    std::uint16_t rows[kMaxVertices] = {};
    int deg[kMaxVertices] = {};
    rows[0] = 0b1110;
    for (int u = 1; u <= 3; ++u) {
        rows[u] = 1;
        deg[u] = 1;
    }
    deg[0] = 3;
    CodeSet found;
    detail::cubic_rec(n, 1, rows, deg, found);
    return found.extract_sorted();
}

} // namespace enumeration

} // namespace glg
