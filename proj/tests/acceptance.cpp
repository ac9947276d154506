// Acceptance checklist: each criterion prints one PASS/FAIL line with a
// short evidence summary. Run with no arguments for the full list or with
// a criterion number (1..9) for a single one; the exit code is 0 only if
// everything requested passed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "glg/glg.hpp"
#include "support/conway_oracle.hpp"
#include "support/naive_engine.hpp"

using namespace glg;

namespace {

std::string fixture(const std::string& name) {
    return std::string(GLG_TEST_DATA_DIR) + "/" + name;
}

std::vector<Graph> corpus_from_codes(int n, const std::vector<std::uint64_t>& codes) {
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(enumeration::graph_from_code(n, code));
    return out;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << why;
    }
};

// 1. Engine equivalence: every connected graph on up to 6 vertices, every
// single-vertex seed, every rule triple in {0,1,2,3}^3, full trajectories
// against the per-vertex reference.
Check criterion_oracle_equivalence() {
    Check c;
    long games = 0;
    for (int n = 1; n <= 6 && c.ok; ++n) {
        for (const Graph& g : corpus_from_codes(n, enumeration::connected_graph_codes(n))) {
            const auto adj = naive::adjacency_lists(g);
            for (int a = 0; a <= 3; ++a)
                for (int d = 0; d <= 3; ++d)
                    for (int r = 0; r <= 3; ++r)
                        for (int v = 0; v < n; ++v) {
                            const Trajectory mine = simulate(
                                g, single_vertex_pattern(n, v), {a, d, r}, default_cap(n));
                            const naive::Result ref =
                                naive::simulate(adj, {v}, a, d, r, default_cap(n));
                            ++games;
                            bool same = !ref.capped &&
                                        (mine.outcome == Outcome::Died) == ref.died &&
                                        mine.complexity == ref.complexity &&
                                        mine.patterns.size() == ref.patterns.size();
                            if (same && ref.died) same = mine.died_at == ref.died_at;
                            if (same && !ref.died)
                                same = mine.cycle_entry == ref.cycle_entry &&
                                       mine.repeat_at == ref.repeat_at;
                            for (std::size_t t = 0; same && t < ref.patterns.size(); ++t) {
                                const auto idx = mine.patterns[t].to_indices();
                                same = naive::Pattern(idx.begin(), idx.end()) == ref.patterns[t];
                            }
                            if (!same) {
                                c.fail("mismatch on " + encode_graph6(g) + " seed " +
                                       std::to_string(v) + " params " + std::to_string(a) + "," +
                                       std::to_string(d) + "," + std::to_string(r));
                                return c;
                            }
                        }
        }
    }
    c.detail << games << " games compared";
    return c;
}

// 2. The two published example games, exactly.
Check criterion_fixture_games() {
    Check c;
    const Trajectory k5 = simulate(make_complete(5), single_vertex_pattern(5, 0), {});
    if (k5.complexity != 2) c.fail("K5 complexity " + std::to_string(k5.complexity));
    if (k5.outcome != Outcome::Cycled) c.fail("K5 halted");
    const Trajectory p5 = simulate(make_path(5), single_vertex_pattern(5, 2), {});
    if (p5.complexity != 3) c.fail("P5 complexity " + std::to_string(p5.complexity));
    if (p5.outcome != Outcome::Cycled || p5.cycle_entry != 1)
        c.fail("P5 cycle entry " + std::to_string(p5.cycle_entry));
    if (c.ok) c.detail << "K5 complexity 2 cycling, P5 complexity 3 entering at 1";
    return c;
}

// 3. Rule (2,5,3) on wrapped Moore grids is Conway's Life.
Check criterion_conway() {
    Check c;
    const GameParams life{2, 5, 3};
    SplitMix64 rng(161803);
    long states = 0;
    for (int size = 3; size <= 8 && c.ok; ++size) {
        const Graph grid = make_grid(size, size, true);
        for (int trial = 0; trial < 1000 && c.ok; ++trial) {
            conway::Board board(size, std::vector<int>(size, 0));
            LifePattern pattern(size * size);
            for (int y = 0; y < size; ++y)
                for (int x = 0; x < size; ++x)
                    if (rng.next() & 1) {
                        board[y][x] = 1;
                        pattern.set(y * size + x);
                    }
            ++states;
            for (int t = 0; t < 2 && c.ok; ++t) {
                board = conway::step(board);
                pattern = step(grid, pattern, life);
                LifePattern expect(size * size);
                for (int y = 0; y < size; ++y)
                    for (int x = 0; x < size; ++x)
                        if (board[y][x]) expect.set(y * size + x);
                if (!(pattern == expect))
                    c.fail("divergence on " + std::to_string(size) + "x" + std::to_string(size));
            }
        }
    }

    const Graph five = make_grid(5, 5, true);
    LifePattern blinker(25);
    for (int x = 1; x <= 3; ++x) blinker.set(2 * 5 + x);
    const LifePattern b1 = step(five, blinker, life);
    if (b1 == blinker || !(step(five, b1, life) == blinker)) c.fail("blinker period != 2");

    const int w = 8, h = 8;
    const Graph eight = make_grid(w, h, true);
    const auto at = [w](int x, int y) { return y * w + x; };
    LifePattern glider(w * h);
    glider.set(at(1, 0));
    glider.set(at(2, 1));
    glider.set(at(0, 2));
    glider.set(at(1, 2));
    glider.set(at(2, 2));
    LifePattern shifted(w * h);
    for (int v : glider.to_indices()) shifted.set(at((v % w + 1) % w, (v / w + 1) % h));
    LifePattern cur = glider;
    for (int t = 1; t <= 32; ++t) {
        cur = step(eight, cur, life);
        if (t == 4 && !(cur == shifted)) c.fail("glider not translated by (1,1) at step 4");
        if (t < 32 && cur == glider) c.fail("glider returned early at " + std::to_string(t));
    }
    if (!(cur == glider)) c.fail("glider did not return at step 32");

    if (c.ok) c.detail << states << " random torus states, blinker, glider verified";
    return c;
}

// 4. Permuted copies are never certified non-isomorphic.
Check criterion_soundness() {
    Check c;
    SplitMix64 rng(271828);
    int verdicts = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(bounded(rng, 9));
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        const Graph g = random_gnm(n, static_cast<long>(bounded(rng, max_m + 1)), rng.next());
        const Graph h = apply_permutation(g, Permutation::random(n, rng));
        const int k = 1 + static_cast<int>(bounded(rng, 3));
        if (test_isomorphism(g, h, k).non_isomorphic()) {
            c.fail("false certificate on " + encode_graph6(g));
            return c;
        }
        ++verdicts;
    }
    c.detail << verdicts << " permuted pairs, zero false certificates";
    return c;
}

// 5. Two steps separate all connected graphs for n = 5..8.
Check criterion_connected_scan() {
    Check c;
    const std::pair<std::string, std::size_t> files[] = {
        {"connected_n5.g6", 21}, {"connected_n6.g6", 112},
        {"connected_n7.g6", 853}, {"connected_n8.g6", 11117}};
    for (const auto& [name, count] : files) {
        const auto corpus = load_graphs(fixture(name));
        if (corpus.size() != count) {
            c.fail(name + " holds " + std::to_string(corpus.size()) + " records");
            continue;
        }
        const ScanReport report = collision_scan(corpus, 2, resolve_thread_count(0));
        if (report.collision_count != 0)
            c.fail(name + ": " + std::to_string(report.collision_count) + " collisions");
        else
            c.detail << (c.detail.tellp() > 0 ? ", " : "") << corpus.size() << " graphs clean";
    }
    return c;
}

// 6. Same, for the connected cubic corpora.
Check criterion_cubic_scan() {
    Check c;
    const std::pair<std::string, std::size_t> files[] = {
        {"cubic_n6.g6", 2}, {"cubic_n8.g6", 5}, {"cubic_n10.g6", 19}};
    for (const auto& [name, count] : files) {
        const auto corpus = load_graphs(fixture(name));
        if (corpus.size() != count) {
            c.fail(name + " holds " + std::to_string(corpus.size()) + " records");
            continue;
        }
        const ScanReport report = collision_scan(corpus, 2, resolve_thread_count(0));
        if (report.collision_count != 0)
            c.fail(name + ": " + std::to_string(report.collision_count) + " collisions");
        else
            c.detail << (c.detail.tellp() > 0 ? ", " : "") << corpus.size() << " graphs clean";
    }
    return c;
}

// 7. Phase shape: interior complexity peak on the exhaustive n=8 sweep, a
// halting drop between sparse and dense ensembles, and bit-stable output.
Check criterion_phase() {
    Check c;

    const auto corpus = load_graphs(fixture("connected_n8.g6"));
    const auto records = exhaustive_complexity(corpus, {}, 0, resolve_thread_count(0));
    double best = -1;
    long best_m = -1;
    for (const DensityRecord& rec : records)
        if (rec.mean_complexity() > best) {
            best = rec.mean_complexity();
            best_m = rec.m;
        }
    for (const DensityRecord& rec : records)
        if (rec.mean_complexity() == best && (rec.m <= 7 || rec.m >= 28))
            c.fail("peak at boundary m=" + std::to_string(rec.m));
    if (c.ok) c.detail << "n=8 peak at m=" << best_m << " (mean " << format_double(best) << ")";

    std::vector<long> ms(60);
    for (long m = 1; m <= 60; ++m) ms[m - 1] = m;
    const auto csv_of = [&](int threads) {
        const auto recs = random_ensemble(15, ms, 100, 7, {}, 0, threads);
        std::ostringstream out;
        write_density_csv(out, recs, {}, true, 7);
        return std::pair(recs, out.str());
    };
    const auto [recs1, csv1] = csv_of(1);
    const auto [recs1b, csv1b] = csv_of(1);
    const auto [recs8, csv8] = csv_of(8);
    if (csv1 != csv1b) c.fail("ensemble not reproducible across invocations");
    if (csv1 != csv8) c.fail("ensemble differs between 1 and 8 threads");
    const double h5 = recs1[4].halting_fraction();
    const double h60 = recs1[59].halting_fraction();
    if (!(h60 < h5))
        c.fail("halting fraction did not drop: h(5)=" + format_double(h5) +
               " h(60)=" + format_double(h60));
    if (c.ok)
        c.detail << "; h(5)=" << format_double(h5) << " > h(60)=" << format_double(h60)
                 << ", csv stable at 1 and 8 threads";
    return c;
}

// 8. Metric sanity: identity, bit-exact symmetry, triangle inequality on
// 10,000 sampled triples, and a non-empty line listing at n=6.
Check criterion_metric() {
    Check c;
    const auto corpus = corpus_from_codes(6, enumeration::all_graph_codes(6));
    std::vector<std::vector<double>> vecs;
    vecs.reserve(corpus.size());
    for (const Graph& g : corpus) vecs.push_back(extract_features(g, 2, false).to_doubles());
    const auto dist = [&](std::size_t x, std::size_t y) {
        return feature_euclidean(vecs[x], vecs[y]);
    };

    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (glg_distance(corpus[i], corpus[i], 2, false) != 0.0) c.fail("self distance != 0");

    SplitMix64 rng(577215);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t x = bounded(rng, corpus.size());
        const std::size_t y = bounded(rng, corpus.size());
        if (dist(x, y) != dist(y, x)) {
            c.fail("asymmetry found");
            break;
        }
    }

    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t x = bounded(rng, corpus.size());
        const std::size_t y = bounded(rng, corpus.size());
        const std::size_t z = bounded(rng, corpus.size());
        if (dist(x, z) > dist(x, y) + dist(y, z) + 1e-12) {
            c.fail("triangle violation");
            break;
        }
        ++checked;
    }

    // Lines are read off the one-step embedding: at two steps the label
    // growth is nonlinear enough that no triple on this corpus meets the
    // tolerance (the nearest miss is ~3e-7 relative).
    const auto lines = find_lines(corpus_from_codes(6, enumeration::connected_graph_codes(6)), 1,
                                  false, 1e-9, resolve_thread_count(0));
    if (lines.empty()) c.fail("no metric lines among connected 6-vertex graphs");

    if (c.ok)
        c.detail << checked << " triples within 1e-12, " << lines.size()
                 << " line triples found at k=1";
    return c;
}

// 9. Codec round-trips across the full small-graph corpora.
Check criterion_graph6() {
    Check c;
    long checked = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : corpus_from_codes(n, enumeration::all_graph_codes(n))) {
            const std::string rec = encode_graph6(g);
            if (!(decode_graph6(rec) == g) || encode_graph6(decode_graph6(rec)) != rec) {
                c.fail("round-trip failed for " + rec);
                return c;
            }
            ++checked;
        }
    }
    c.detail << checked << " graphs round-tripped";
    return c;
}

struct Criterion {
    int id;
    const char* name;
    Check (*run)();
};

const Criterion kCriteria[] = {
    {1, "engine-oracle-equivalence", criterion_oracle_equivalence},
    {2, "fixture-games", criterion_fixture_games},
    {3, "conway-equivalence", criterion_conway},
    {4, "isomorphism-soundness", criterion_soundness},
    {5, "connected-scan-k2", criterion_connected_scan},
    {6, "cubic-scan-k2", criterion_cubic_scan},
    {7, "phase-transition-shape", criterion_phase},
    {8, "metric-properties", criterion_metric},
    {9, "graph6-round-trip", criterion_graph6},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::cerr << "usage: glg_acceptance [1..9|all]\n";
            return 2;
        }
    }

    bool all_ok = true;
    for (const Criterion& criterion : kCriteria) {
        if (only != 0 && criterion.id != only) continue;
        const auto started = std::chrono::steady_clock::now();
        const Check check = criterion.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::cout << (check.ok ? "PASS" : "FAIL") << " " << criterion.id << " " << criterion.name
                  << " (" << check.detail.str() << ", " << format_double(secs) << "s)\n"
                  << std::flush;
        all_ok = all_ok && check.ok;
    }
    return all_ok ? 0 : 1;
}
