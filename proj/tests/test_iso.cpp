#include <catch2/catch_amalgamated.hpp>

#include "glg/enumerate.hpp"
#include "glg/generators.hpp"
#include "glg/iso.hpp"

using namespace glg;

TEST_CASE("size mismatch is certified at step zero", "[iso]") {
    const IsoVerdict v = test_isomorphism(make_complete(3), make_complete(4), 2);
    REQUIRE(v.non_isomorphic());
    REQUIRE(v.step == 0);

    Graph a(4), b(4);
    a.add_edge(0, 1);
    const IsoVerdict w = test_isomorphism(a, b, 2);
    REQUIRE(w.non_isomorphic());
    REQUIRE(w.step == 0);
}

TEST_CASE("degree twins are certified at step one", "[iso]") {
    const IsoVerdict v = test_isomorphism(make_path(4), make_star(4), 1);
    REQUIRE(v.non_isomorphic());
    REQUIRE(v.step == 1);
}

TEST_CASE("isomorphic graphs always pass", "[iso]") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(bounded(rng, 8));
        const long max_m = static_cast<long>(n) * (n - 1) / 2;
        const Graph g = random_gnm(n, static_cast<long>(bounded(rng, max_m + 1)), rng.next());
        const Graph h = apply_permutation(g, Permutation::random(n, rng));
        const int k = 1 + static_cast<int>(bounded(rng, 3));
        const IsoVerdict v = test_isomorphism(g, h, k);
        REQUIRE(v.kind == IsoVerdict::Kind::LikelyIsomorphic);
        REQUIRE(v.step == k);
    }
}

TEST_CASE("regular degree twins need the second step", "[iso]") {
    // C6 and two disjoint triangles are both 2-regular, so the first block
    // is uniform and a one-step budget cannot separate them. The second
    // step reads the live subgraph (the triangles stay mutually adjacent)
    // and certifies.
    const Graph c6 = make_cycle(6);
    Graph triangles(6);
    for (int base : {0, 3}) {
        triangles.add_edge(base, base + 1);
        triangles.add_edge(base + 1, base + 2);
        triangles.add_edge(base, base + 2);
    }
    REQUIRE_FALSE(test_isomorphism(c6, triangles, 1).non_isomorphic());
    const IsoVerdict v = test_isomorphism(c6, triangles, 2);
    REQUIRE(v.non_isomorphic());
    REQUIRE(v.step == 2);
}

TEST_CASE("the verdict is one-sided: strongly regular twins always pass", "[iso]") {
    // The Shrikhande graph and the 4x4 rook's graph share the strongly
    // regular parameters (16, 6, 2, 2) without being isomorphic. Every
    // game instance evolves identically on both, so no step budget
    // separates them: LikelyIsomorphic never certifies isomorphism.
    Graph shri(16), rook(16);
    const auto id = [](int x, int y) { return 4 * (x % 4) + (y % 4); };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            shri.add_edge(id(x, y), id(x + 1, y));
            shri.add_edge(id(x, y), id(x, y + 1));
            shri.add_edge(id(x, y), id(x + 1, y + 1));
            for (int z = y + 1; z < 4; ++z) rook.add_edge(id(x, y), id(x, z));
            for (int z = x + 1; z < 4; ++z) rook.add_edge(id(x, y), id(z, y));
        }
    REQUIRE(shri.m() == 48);
    REQUIRE(rook.m() == 48);
    for (int k = 1; k <= 3; ++k) {
        const IsoVerdict v = test_isomorphism(shri, rook, k);
        REQUIRE(v.kind == IsoVerdict::Kind::LikelyIsomorphic);
    }
}

TEST_CASE("collision scan over every 6-vertex graph finds none", "[iso]") {
    // All 156 graphs on 6 vertices (connected or not) land in distinct
    // groups at k = 2.
    std::vector<Graph> corpus;
    for (std::uint64_t code : enumeration::all_graph_codes(6))
        corpus.push_back(enumeration::graph_from_code(6, code));
    const ScanReport report = collision_scan(corpus, 2);
    REQUIRE(report.total == 156);
    REQUIRE(report.group_count == 156);
    REQUIRE(report.collision_count == 0);
    REQUIRE(report.colliding_groups.empty());
}

TEST_CASE("scan partition is independent of corpus order and threads", "[iso]") {
    std::vector<Graph> corpus;
    for (std::uint64_t code : enumeration::all_graph_codes(5))
        corpus.push_back(enumeration::graph_from_code(5, code));
    const ScanReport base = collision_scan(corpus, 2, 1);

    std::vector<Graph> reversed(corpus.rbegin(), corpus.rend());
    const ScanReport rev = collision_scan(reversed, 2, 4);
    REQUIRE(base.group_count == rev.group_count);
    REQUIRE(base.collision_count == rev.collision_count);

    REQUIRE_THROWS_AS(collision_scan(corpus, 0), std::invalid_argument);
}

TEST_CASE("step budget must be positive", "[iso]") {
    REQUIRE_THROWS_AS(test_isomorphism(make_path(3), make_path(3), 0), std::invalid_argument);
}
