#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "glg/engine.hpp"
#include "glg/graph.hpp"
#include "glg/graph6.hpp"
#include "glg/generators.hpp"
#include "glg/parallel.hpp"
#include "glg/rng.hpp"

namespace glg {

/// Shortest decimal representation that round-trips the double.
inline std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

/// Aggregated statistics for all games at one (n, m) cell. Sums are kept
/// as exact integers; means are formed only at output time, so the record
/// is independent of accumulation order.
struct DensityRecord {
    int n = 0;
    long m = 0;
    long games = 0;
    long complexity_sum = 0;
    int max_complexity = 0;
    long halted = 0;

    double density() const {
        return n > 1 ? 2.0 * static_cast<double>(m) / (static_cast<double>(n) * (n - 1)) : 0.0;
    }
    double mean_complexity() const {
        return games > 0 ? static_cast<double>(complexity_sum) / static_cast<double>(games) : 0.0;
    }
    double halting_fraction() const {
        return games > 0 ? static_cast<double>(halted) / static_cast<double>(games) : 0.0;
    }
};

namespace detail {

struct GameTally {
    long games = 0;
    long complexity_sum = 0;
    int max_complexity = 0;
    long halted = 0;

    void add(const Trajectory& tr) {
        ++games;
        complexity_sum += tr.complexity;
        if (tr.complexity > max_complexity) max_complexity = tr.complexity;
        if (tr.halted()) ++halted;
    }

    void merge(const GameTally& o) {
        games += o.games;
        complexity_sum += o.complexity_sum;
        if (o.max_complexity > max_complexity) max_complexity = o.max_complexity;
        halted += o.halted;
    }
};

/// Runs one game per vertex and tallies the outcomes. CapExceeded is
/// re-raised with the offending graph6 record attached.
inline GameTally play_all_seeds(const Graph& g, const GameParams& params, int cap) {
    GameTally tally;
    for (int v = 0; v < g.n(); ++v) {
        try {
            tally.add(simulate(g, single_vertex_pattern(g.n(), v), params, cap));
        } catch (const CapExceededError& e) {
            throw CapExceededError(e.cap, "graph6=" + encode_graph6(g) +
                                              " seed_vertex=" + std::to_string(v));
        }
    }
    return tally;
}

} // namespace detail

/// Simulates every single-vertex seed of every corpus graph and groups the
/// statistics by edge count. The corpus must have a uniform vertex count.
inline std::vector<DensityRecord> exhaustive_complexity(const std::vector<Graph>& corpus,
                                                        const GameParams& params,
                                                        int cap = 0, int threads = 1) {
    if (corpus.empty()) return {};
    const int n = corpus.front().n();
    for (const Graph& g : corpus)
        if (g.n() != n) throw std::invalid_argument("exhaustive_complexity: mixed vertex counts");
    if (cap <= 0) cap = default_cap(n);

    std::vector<detail::GameTally> tallies(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        tallies[i] = detail::play_all_seeds(corpus[i], params, cap);
    });

    std::map<long, DensityRecord> by_m;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        DensityRecord& rec = by_m[corpus[i].m()];
        rec.n = n;
        rec.m = corpus[i].m();
        rec.games += tallies[i].games;
        rec.complexity_sum += tallies[i].complexity_sum;
        if (tallies[i].max_complexity > rec.max_complexity)
            rec.max_complexity = tallies[i].max_complexity;
        rec.halted += tallies[i].halted;
    }
    std::vector<DensityRecord> out;
    out.reserve(by_m.size());
    for (auto& [m, rec] : by_m) out.push_back(rec);
    return out;
}

/// G(n, m) ensembles: samples_per_m graphs per edge count, n games each.
/// Sample s at edge count m always uses the seed derive_seed(rng_seed, m, s),
/// so the sweep is reproducible for any worker count and work order.
inline std::vector<DensityRecord> random_ensemble(int n, const std::vector<long>& m_values,
                                                  int samples_per_m, std::uint64_t rng_seed,
                                                  const GameParams& params, int cap = 0,
                                                  int threads = 1) {
    if (samples_per_m < 1)
        throw std::invalid_argument("random_ensemble: samples_per_m >= 1 required");
    if (cap <= 0) cap = default_cap(n);

    struct Cell {
        long m;
        int sample;
    };
    std::vector<Cell> cells;
    cells.reserve(m_values.size() * static_cast<std::size_t>(samples_per_m));
    for (long m : m_values)
        for (int s = 0; s < samples_per_m; ++s) cells.push_back({m, s});

    std::vector<detail::GameTally> tallies(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        const auto [m, sample] = cells[i];
        const std::uint64_t seed =
            derive_seed(rng_seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(sample));
        const Graph g = random_gnm(n, m, seed);
        tallies[i] = detail::play_all_seeds(g, params, cap);
    });

    std::vector<DensityRecord> out;
    out.reserve(m_values.size());
    for (std::size_t block = 0; block < m_values.size(); ++block) {
        DensityRecord rec;
        rec.n = n;
        rec.m = m_values[block];
        detail::GameTally total;
        for (int s = 0; s < samples_per_m; ++s)
            total.merge(tallies[block * static_cast<std::size_t>(samples_per_m) +
                                static_cast<std::size_t>(s)]);
        rec.games = total.games;
        rec.complexity_sum = total.complexity_sum;
        rec.max_complexity = total.max_complexity;
        rec.halted = total.halted;
        out.push_back(rec);
    }
    return out;
}

/// CSV with one row per record. The seed column is left empty for
/// exhaustive sweeps, which draw nothing. mean scale 1 emits the per-game
/// mean; scale n emits per-graph totals instead.
inline void write_density_csv(std::ostream& out, const std::vector<DensityRecord>& records,
                              const GameParams& params, bool has_seed, std::uint64_t seed,
                              int mean_scale = 1) {
    out << "n,m,density,games,mean_complexity,max_complexity,halting_fraction,params,seed\n";
    for (const DensityRecord& r : records) {
        out << r.n << ',' << r.m << ',' << format_double(r.density()) << ',' << r.games << ','
            << format_double(r.mean_complexity() * mean_scale) << ',' << r.max_complexity << ','
            << format_double(r.halting_fraction()) << ',' << params.survive_alive_min << '-'
            << params.survive_dead_min << '-' << params.birth_alive << ',';
        if (has_seed) out << seed;
        out << '\n';
    }
}

} // namespace glg
