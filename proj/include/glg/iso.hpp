#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glg/features.hpp"
#include "glg/graph.hpp"
#include "glg/parallel.hpp"

namespace glg {

/// Result of the lockstep feature comparison. NonIsomorphic is a sound
/// certificate; LikelyIsomorphic only says the k rounds did not separate
/// the graphs.
struct IsoVerdict {
    enum class Kind { NonIsomorphic, LikelyIsomorphic };

    Kind kind;
    int step; // first differing step for NonIsomorphic (0 = size pre-check); k otherwise

    bool non_isomorphic() const { return kind == Kind::NonIsomorphic; }
};

/// Compares sorted label vectors of both graphs step by step. A vertex or
/// edge count mismatch short-circuits at step 0, before any labels are
/// compared; sorted-vector comparison over unequal sizes would not be
/// meaningful. Labels are exact integers, so comparison is equality.
inline IsoVerdict test_isomorphism(const Graph& g, const Graph& h, int k = 2) {
    if (k < 1) throw std::invalid_argument("test_isomorphism: k >= 1 required");
    if (g.n() != h.n() || g.m() != h.m())
        return {IsoVerdict::Kind::NonIsomorphic, 0};
    FeatureExtractor eg(g), eh(h);
    for (int t = 1; t <= k; ++t) {
        eg.advance();
        eh.advance();
        if (eg.sorted_labels() != eh.sorted_labels())
            return {IsoVerdict::Kind::NonIsomorphic, t};
    }
    return {IsoVerdict::Kind::LikelyIsomorphic, k};
}

/// Corpus-wide grouping by exact feature vector.
struct ScanReport {
    std::size_t total = 0;
    int k = 0;
    std::size_t group_count = 0;     // number of distinct feature vectors
    std::size_t collision_count = 0; // number of non-singleton groups
    std::vector<std::vector<std::size_t>> colliding_groups; // corpus indices, per group
};

/// Groups corpus entries by exact (unnormalized) feature vector equality.
/// Keys are the serialized vectors; grouping sorts (key, index) pairs, so
/// the partition is independent of corpus order and worker scheduling, and
/// memory stays bounded by the serialized keys rather than the vectors.
inline ScanReport collision_scan(const std::vector<Graph>& corpus, int k, int threads = 1) {
    if (k < 1) throw std::invalid_argument("collision_scan: k >= 1 required");
    ScanReport report;
    report.total = corpus.size();
    report.k = k;
    if (corpus.empty()) return report;

    std::vector<std::string> keys(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        keys[i] = extract_features(corpus[i], k, false).serialize();
    });

    std::vector<std::size_t> order(corpus.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return a < b;
    });

    std::size_t start = 0;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        if (i == order.size() || keys[order[i]] != keys[order[start]]) {
            ++report.group_count;
            if (i - start > 1) {
                ++report.collision_count;
                report.colliding_groups.emplace_back(order.begin() + start, order.begin() + i);
            }
            start = i;
        }
    }
    return report;
}

} // namespace glg
