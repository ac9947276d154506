#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glg/engine.hpp"
#include "glg/graph.hpp"

namespace glg {

/// Labels are exact integers, arbitrary precision, so feature equality is
/// decided without tolerance and the non-isomorphism certificate is sound.
using BigInt = boost::multiprecision::cpp_int;

/// Concatenation over t = 1..k of the per-step label vectors, each sorted
/// increasingly. Labels are stored unnormalized together with the step
/// totals; in normalized mode a label reads as labels[i] / total.
/// Normalizing after every update divides each label by the same running
/// total, so the stored integers and their step total represent both modes
/// exactly (and the sort order is shared).
struct FeatureVector {
    int n = 0;
    int k = 0;
    bool normalized = false;
    std::vector<std::vector<BigInt>> blocks; // k blocks, each sorted, length n
    std::vector<BigInt> totals;              // label sum per block

    /// Exact equality under the vector's own mode: integer blocks when
    /// unnormalized, label/total fractions when normalized.
    friend bool operator==(const FeatureVector& a, const FeatureVector& b) {
        if (a.n != b.n || a.k != b.k || a.normalized != b.normalized) return false;
        if (!a.normalized) return a.blocks == b.blocks;
        for (int t = 0; t < a.k; ++t)
            for (int i = 0; i < a.n; ++i)
                if (a.blocks[t][i] * b.totals[t] != b.blocks[t][i] * a.totals[t]) return false;
        return true;
    }

    /// Flat numeric view used by the metric.
    std::vector<double> to_doubles() const {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) {
            const double total = normalized ? totals[t].convert_to<double>() : 1.0;
            for (const BigInt& x : blocks[t]) out.push_back(x.convert_to<double>() / total);
        }
        return out;
    }

    /// One text line: "n k b" then k*n values, decimal integers when
    /// unnormalized, reduced fractions "p/q" when normalized.
    std::string serialize() const {
        std::ostringstream out;
        out << n << ' ' << k << ' ' << (normalized ? 1 : 0);
        for (int t = 0; t < k; ++t) {
            for (const BigInt& x : blocks[t]) {
                if (normalized) {
                    BigInt d = boost::multiprecision::gcd(x, totals[t]);
                    out << ' ' << (x / d) << '/' << (totals[t] / d);
                } else {
                    out << ' ' << x;
                }
            }
        }
        return out.str();
    }
};

/// Advances the n single-seed game instances and the shared label array
/// one step at a time. Instance i starts from the pattern {i}; at each
/// step every instance moves first, then label i grows by the previous
/// labels of the vertices alive in instance i, plus a reinforcement term:
/// a live vertex v with d live neighbors contributes its label excess
/// (label - 1) scaled by d(d+1). Labels start uniform at 1, so every
/// excess is zero at t = 1 and the first block is exactly 1 + deg; from
/// t = 2 on the excess terms read the live-subgraph structure that plain
/// label sums miss. Instances that reach the empty pattern just keep
/// stepping (with a birth count >= 1 the empty pattern is a fixed point,
/// so they contribute nothing).
class FeatureExtractor {
public:
    explicit FeatureExtractor(const Graph& g, GameParams params = {})
        : graph_(&g), params_(params), labels_(static_cast<std::size_t>(g.n()), BigInt(1)) {
        instances_.reserve(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            instances_.push_back(single_vertex_pattern(g.n(), v));
    }

    int step_index() const { return t_; }

    void advance() {
        const int n = graph_->n();
        for (int i = 0; i < n; ++i) instances_[i] = step(*graph_, instances_[i], params_);
        std::vector<BigInt> next(labels_);
        for (int i = 0; i < n; ++i) {
            const LifePattern& alive = instances_[i];
            for (int v = 0; v < n; ++v) {
                if (!alive.test(v)) continue;
                next[i] += labels_[v];
                const int d = and_count(graph_->neighbors(v), alive);
                if (d > 0 && labels_[v] > 1)
                    next[i] += (labels_[v] - 1) * (static_cast<long long>(d) * (d + 1));
            }
        }
        labels_ = std::move(next);
        ++t_;
    }

    std::vector<BigInt> sorted_labels() const {
        std::vector<BigInt> out(labels_);
        std::sort(out.begin(), out.end());
        return out;
    }

    BigInt label_total() const {
        BigInt s = 0;
        for (const BigInt& x : labels_) s += x;
        return s;
    }

private:
    const Graph* graph_;
    GameParams params_;
    std::vector<LifePattern> instances_;
    std::vector<BigInt> labels_;
    int t_ = 0;
};

inline FeatureVector extract_features(const Graph& g, int k, bool normalize,
                                      GameParams params = {}) {
    if (k < 1) throw std::invalid_argument("extract_features: k >= 1 required");
    FeatureVector fv;
    fv.n = g.n();
    fv.k = k;
    fv.normalized = normalize;
    FeatureExtractor ex(g, params);
    for (int t = 1; t <= k; ++t) {
        ex.advance();
        fv.blocks.push_back(ex.sorted_labels());
        fv.totals.push_back(ex.label_total());
    }
    return fv;
}

} // namespace glg
