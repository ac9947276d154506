#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "glg/features.hpp"
#include "glg/graph.hpp"
#include "glg/parallel.hpp"

namespace glg {

/// Euclidean distance between two flat feature views. Terms are
/// accumulated in index order, and (x-y)^2 == (y-x)^2 exactly in IEEE
/// arithmetic, so swapping the arguments reproduces the identical value.
inline double feature_euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

/// Distance between two graphs' feature vectors, computed in floating
/// point from the exact vectors. Defined only for equal vertex counts.
inline double glg_distance(const Graph& g, const Graph& h, int k = 2, bool normalize = false) {
    if (g.n() != h.n())
        throw std::invalid_argument("glg_distance: vertex counts differ");
    const auto fg = extract_features(g, k, normalize).to_doubles();
    const auto fh = extract_features(h, k, normalize).to_doubles();
    return feature_euclidean(fg, fh);
}

/// Pairwise distances for a corpus of equal-sized graphs.
inline std::vector<std::vector<double>> distance_matrix(const std::vector<Graph>& corpus, int k,
                                                        bool normalize, int threads = 1) {
    for (const Graph& g : corpus)
        if (g.n() != corpus.front().n())
            throw std::invalid_argument("distance_matrix: mixed vertex counts");
    std::vector<std::vector<double>> feats(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        feats[i] = extract_features(corpus[i], k, normalize).to_doubles();
    });
    std::vector<std::vector<double>> dist(corpus.size(),
                                          std::vector<double>(corpus.size(), 0.0));
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < corpus.size(); ++j)
            if (j != i) dist[i][j] = feature_euclidean(feats[i], feats[j]);
    });
    return dist;
}

/// A triple where the triangle inequality closes to equality:
/// d(i,j) = d(i,mid) + d(j,mid) up to the residual.
struct LineTriple {
    std::size_t i = 0, j = 0, mid = 0;
    double d_ij = 0, d_i_mid = 0, d_j_mid = 0;
    double residual = 0;
    bool exact = false; // integer collinearity certificate, see exact_collinear
};

/// Exact test that mid's feature vector lies strictly inside the segment
/// between i's and j's: the integer difference vectors u = f_i - f_mid and
/// w = f_mid - f_j must be nonzero, parallel, and equally oriented.
inline bool exact_collinear(const FeatureVector& fi, const FeatureVector& fmid,
                            const FeatureVector& fj) {
    std::vector<BigInt> u, w;
    for (int t = 0; t < fi.k; ++t) {
        for (int x = 0; x < fi.n; ++x) {
            u.push_back(fi.blocks[t][x] - fmid.blocks[t][x]);
            w.push_back(fmid.blocks[t][x] - fj.blocks[t][x]);
        }
    }
    std::size_t pivot = u.size();
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a] != 0 || w[a] != 0) {
            pivot = a;
            break;
        }
    }
    if (pivot == u.size()) return false; // all three vectors equal
    // At the pivot both components must be nonzero with the same sign,
    // otherwise one difference is null or points the other way.
    if (u[pivot] == 0 || w[pivot] == 0) return false;
    if ((u[pivot] < 0) != (w[pivot] < 0)) return false;
    for (std::size_t a = 0; a < u.size(); ++a)
        if (u[pivot] * w[a] != w[pivot] * u[a]) return false;
    return true;
}

/// Enumerates triples (i < j, mid distinct from both) whose residual
/// |d(i,j) - d(i,mid) - d(j,mid)| is within tol relative to d(i,j), with
/// all three distances strictly positive. Output is sorted by residual,
/// then lexicographically by indices. Restricted to corpora of graphs on
/// at most max_n vertices unless the caller raises the limit: the scan is
/// cubic in the corpus size.
inline std::vector<LineTriple> find_lines(const std::vector<Graph>& corpus, int k,
                                          bool normalize, double tol, int threads = 1,
                                          int max_n = 6) {
    if (tol <= 0) throw std::invalid_argument("find_lines: tol > 0 required");
    if (corpus.empty()) return {};
    for (const Graph& g : corpus)
        if (g.n() != corpus.front().n())
            throw std::invalid_argument("find_lines: mixed vertex counts");
    if (corpus.front().n() > max_n)
        throw std::invalid_argument(
            "find_lines: corpus exceeds the n <= " + std::to_string(max_n) +
            " guard for the cubic scan; raise the limit explicitly to override");

    std::vector<FeatureVector> feats(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        feats[i] = extract_features(corpus[i], k, normalize);
    });
    const auto dist = distance_matrix(corpus, k, normalize, threads);

    const std::size_t c = corpus.size();
    std::vector<std::vector<LineTriple>> found(c);
    parallel_for(c, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            const double d_ij = dist[i][j];
            if (d_ij <= 0) continue;
            for (std::size_t mid = 0; mid < c; ++mid) {
                if (mid == i || mid == j) continue;
                const double d_im = dist[i][mid];
                const double d_jm = dist[j][mid];
                if (d_im <= 0 || d_jm <= 0) continue;
                const double residual = std::abs(d_ij - d_im - d_jm);
                if (residual <= tol * d_ij) {
                    LineTriple lt{i, j, mid, d_ij, d_im, d_jm, residual, false};
                    lt.exact = exact_collinear(feats[i], feats[mid], feats[j]);
                    found[i].push_back(lt);
                }
            }
        }
    });

    std::vector<LineTriple> out;
    for (auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), [](const LineTriple& a, const LineTriple& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.mid < b.mid;
    });
    return out;
}

} // namespace glg
