#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "glg/bitset.hpp"
#include "glg/graph.hpp"

namespace glg {

/// The set of alive vertices at one step.
using LifePattern = Bitset;

inline LifePattern single_vertex_pattern(int n, int v) { return Bitset::single(n, v); }

/// Rule parameters. An alive vertex survives iff it has at least
/// survive_alive_min alive neighbors and at least survive_dead_min dead
/// neighbors; a dead vertex is born iff it has exactly birth_alive alive
/// neighbors. Counts larger than the maximum degree simply never trigger.
struct GameParams {
    int survive_alive_min = 1;
    int survive_dead_min = 1;
    int birth_alive = 1;

    bool operator==(const GameParams&) const = default;
};

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(int cap, std::string context = "")
        : std::runtime_error("simulation exceeded the step cap (" + std::to_string(cap) + ")" +
                             (context.empty() ? "" : " " + context)),
          cap(cap), context(std::move(context)) {}

    int cap;
    std::string context;
};

enum class Outcome { Died, Cycled };

/// One full run: A_0 .. A_terminal plus how it ended. The pattern list
/// includes the terminating step (the empty pattern for Died, the repeat
/// occurrence for Cycled). Complexity counts the distinct non-empty
/// patterns observed, which excludes the all-dead state.
struct Trajectory {
    std::vector<LifePattern> patterns;
    Outcome outcome = Outcome::Died;
    int died_at = -1;     // t_d, valid when outcome == Died
    int cycle_entry = -1; // first index of the repeated pattern, when Cycled
    int repeat_at = -1;   // step at which the repeat was detected, when Cycled
    int complexity = 0;

    bool halted() const { return outcome == Outcome::Died; }
};

/// Synchronous update: every vertex reads the state at t-1. Total
/// function; an out-of-range alive set is the only precondition breach.
inline LifePattern step(const Graph& g, const LifePattern& current, const GameParams& p) {
    if (current.size_bits() != g.n())
        throw std::invalid_argument("step: pattern size does not match graph");
    LifePattern next(g.n());
    for (int v = 0; v < g.n(); ++v) {
        const int alive_nbrs = and_count(current, g.neighbors(v));
        if (current.test(v)) {
            const int dead_nbrs = g.degree(v) - alive_nbrs;
            if (alive_nbrs >= p.survive_alive_min && dead_nbrs >= p.survive_dead_min)
                next.set(v);
        } else if (alive_nbrs == p.birth_alive) {
            next.set(v);
        }
    }
    return next;
}

/// Cap that makes CapExceeded impossible for n <= 19: at most 2^n distinct
/// patterns exist, so a repeat or death occurs within 2^n + 1 steps.
inline int default_cap(int n) {
    if (n >= 20) return 1000000;
    return (1 << n) + 1;
}

/// Iterates the dynamics until the pattern dies (becomes empty; reaching
/// the all-dead state terminates the run for every rule choice), repeats
/// a previously seen pattern, or the cap runs out. Repeats are detected
/// exactly: seen patterns key an associative map, so no hash collision can
/// produce a false cycle.
inline Trajectory simulate(const Graph& g, const LifePattern& seed, const GameParams& p,
                           int cap) {
    if (cap < 1) throw std::invalid_argument("simulate: cap >= 1 required");
    Trajectory tr;
    tr.patterns.push_back(seed);

    std::unordered_map<Bitset, int, Bitset::Hash> seen;
    if (seed.none()) {
        tr.outcome = Outcome::Died;
        tr.died_at = 0;
        tr.complexity = 0;
        return tr;
    }
    seen.emplace(seed, 0);

    for (int t = 1; t <= cap; ++t) {
        LifePattern next = step(g, tr.patterns.back(), p);
        tr.patterns.push_back(next);
        if (next.none()) {
            tr.outcome = Outcome::Died;
            tr.died_at = t;
            tr.complexity = static_cast<int>(seen.size());
            return tr;
        }
        auto [it, inserted] = seen.emplace(next, t);
        if (!inserted) {
            tr.outcome = Outcome::Cycled;
            tr.cycle_entry = it->second;
            tr.repeat_at = t;
            tr.complexity = static_cast<int>(seen.size());
            return tr;
        }
    }
    throw CapExceededError(cap);
}

inline Trajectory simulate(const Graph& g, const LifePattern& seed, const GameParams& p) {
    return simulate(g, seed, p, default_cap(g.n()));
}

/// True iff the run reaches the all-dead state.
inline bool halts(const Graph& g, const LifePattern& seed, const GameParams& p, int cap) {
    return simulate(g, seed, p, cap).halted();
}

inline bool halts(const Graph& g, const LifePattern& seed, const GameParams& p) {
    return halts(g, seed, p, default_cap(g.n()));
}

} // namespace glg
