#include <doctest.h>

#include "nutkit/aut.hpp"
#include "nutkit/constructions.hpp"
#include "nutkit/enumerate.hpp"
#include "nutkit/families.hpp"
#include "nutkit/graph6.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/orbits.hpp"
#include "nutkit/verify.hpp"
#include "support/oracles.hpp"

using namespace nutkit;

namespace {

// smallest nut graph with a bridge; found by scanning all ways of joining two
// connected graphs on <= 5 vertices with a bridge (none exists at order <= 8)
const char* kBridgedNut9 = "HwCSGOD";

OrbitSignature omega(const Graph& g) { return orbits(g, automorphism_group(g)).second; }

} // namespace

TEST_CASE("multiplier basics") {
    for (int n = 3; n <= 8; ++n) CHECK(multiplier(cycle(n), 3) == triangle_cycle(n));
    const Graph m = multiplier(circulant(12, {1, 5}), 3);
    CHECK(m.order() == 60);
    CHECK(is_nut(m));
    const Graph m5 = multiplier(cycle(4), 5);
    CHECK(m5.order() == 20);
    CHECK(is_nut(m5));
    CHECK(multiplier_nut_guaranteed(cycle(4), 5));
    CHECK_FALSE(multiplier_nut_guaranteed(cycle(5), 5)); // odd cycle is not bipartite
    CHECK(multiplier_nut_guaranteed(cycle(5), 7));       // 7 = 3 (mod 4)

    CHECK_THROWS_AS(multiplier(path(3), 3), not_regular);
    CHECK_THROWS_AS(multiplier(complete(4), 3), odd_degree);
    CHECK_THROWS_AS(multiplier(cycle(4), 4), even_cycle_length);
    CHECK_THROWS_AS(multiplier(cycle(4), 1), even_cycle_length);
}

TEST_CASE("multiplier output is nut whenever the hypothesis holds") {
    const std::vector<std::pair<Graph, int>> cases = {
        {cycle(5), 3},  {cycle(6), 3},  {complete(5), 3}, {circulant(9, {1, 2}), 3},
        {cycle(4), 5},  {cycle(6), 5},  {hypercube(2), 5}, {complete_bipartite(2), 5},
        {cycle(3), 7},
    };
    for (const auto& [g, k] : cases) {
        REQUIRE(multiplier_nut_guaranteed(g, k));
        CHECK(is_nut(multiplier(g, k)));
    }
}

TEST_CASE("bridge construction") {
    const Graph g = parse_graph6(kBridgedNut9);
    REQUIRE(is_nut(g));
    // locate a bridge orbit
    const auto [p, before] = orbits(g, automorphism_group(g));
    const std::vector<Edge>* bridge_orbit = nullptr;
    for (const auto& cls : p.edge_orbits)
        if (g.is_bridge(cls.front())) bridge_orbit = &cls;
    REQUIRE(bridge_orbit != nullptr);

    const Graph b = bridge_construction(g, *bridge_orbit);
    CHECK(b.order() == g.order() + 2 * static_cast<int>(bridge_orbit->size()));
    CHECK(is_nut(b));

    // non-bridge orbit is rejected
    const std::vector<Edge>* cycle_orbit = nullptr;
    for (const auto& cls : p.edge_orbits)
        if (!g.is_bridge(cls.front())) cycle_orbit = &cls;
    REQUIRE(cycle_orbit != nullptr);
    CHECK_THROWS_AS(bridge_construction(g, *cycle_orbit), not_bridge);

    // partial orbit is rejected
    if (bridge_orbit->size() > 1) {
        std::vector<Edge> partial{bridge_orbit->front()};
        CHECK_THROWS_AS(bridge_construction(g, partial), not_full_orbit);
    }
    CHECK_THROWS_AS(bridge_construction(cycle(6), {Edge(0, 1)}), not_nut_graph);
}

TEST_CASE("bridge orbit deltas under the group-order guard") {
    const Graph g = parse_graph6(kBridgedNut9);
    const auto [p, before] = orbits(g, automorphism_group(g));
    for (const auto& cls : p.edge_orbits) {
        if (!g.is_bridge(cls.front())) continue;
        const Edge e = cls.front();
        auto [delta, rep] = check_construction_delta(g, ConstructionKind::bridge, e.u, e.v);
        CHECK(rep.ok());
        CHECK(is_nut(delta.result));
        if (delta.group_preserved) {
            const int step = delta.swap_endpoints ? 1 : 2;
            CHECK(delta.after.ov == delta.before.ov + step);
            CHECK(delta.after.oe == delta.before.oe + step);
        }
    }
}

TEST_CASE("subdivision construction") {
    const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
    const auto [p, before] = orbits(s1, automorphism_group(s1));
    for (const auto& cls : p.edge_orbits) {
        const Graph s = subdivision_construction(s1, cls);
        CHECK(s.order() == s1.order() + 4 * static_cast<int>(cls.size()));
        CHECK(is_nut(s));
    }

    // top-edge orbit of the triangle cycle: 3 edges, +12 vertices
    const Graph t3 = triangle_cycle(3);
    const auto [pt, st] = orbits(t3, automorphism_group(t3));
    for (const auto& cls : pt.edge_orbits) {
        if (cls.front().u < 3 || cls.size() != 3) continue; // want the top-top orbit
        const Graph s = subdivision_construction(t3, cls);
        CHECK(s.order() == 21);
        CHECK(is_nut(s));
    }
    CHECK_THROWS_AS(subdivision_construction(cycle(6), {Edge(0, 1)}), not_nut_graph);
}

TEST_CASE("subdivision deltas on S1 orbits with the guard") {
    const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
    const auto [p, before] = orbits(s1, automorphism_group(s1));
    for (const auto& cls : p.edge_orbits) {
        const Edge e = cls.front();
        auto [delta, rep] = check_construction_delta(s1, ConstructionKind::subdivision, e.u, e.v);
        CHECK(rep.ok());
        if (delta.group_preserved) {
            const int step = delta.swap_endpoints ? 2 : 4;
            CHECK(delta.after.ov == delta.before.ov + step);
            CHECK(delta.after.oe == delta.before.oe + step);
        }
    }
}

TEST_CASE("fowler construction") {
    const Graph fig = sporadic("phi5_d3");
    auto [delta, rep] = check_construction_delta(fig, ConstructionKind::fowler, 2);
    CHECK(rep.ok());
    CHECK(delta.group_preserved);
    CHECK(delta.t == 2);
    CHECK(delta.tau == 3);
    CHECK(delta.phi == 5);
    CHECK(is_nut(delta.result));
    CHECK(delta.result.order() == 8 + 2 * 3);

    // degree sequence is preserved: the multiset of degrees matches
    auto degrees = [](const Graph& g) {
        std::vector<int> ds;
        for (int v = 0; v < g.order(); ++v) ds.push_back(g.degree(v));
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    const std::vector<int> before_deg = degrees(fig);
    std::vector<int> after_deg = degrees(delta.result);
    // the 2d new vertices all have degree d = 3
    CHECK(std::count(after_deg.begin(), after_deg.end(), 3) ==
          std::count(before_deg.begin(), before_deg.end(), 3) + 6);

    CHECK_THROWS_AS(fowler(cycle(6), {0, 1, 2, 3, 4, 5}), not_nut_graph);
    const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
    CHECK_THROWS_AS(fowler(s1, {0, 1}), not_full_orbit);
}

TEST_CASE("fowler on an orbit with several vertices") {
    const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
    const auto [p, sig] = orbits(s1, automorphism_group(s1));
    // orbit of the two triangle tops {1, 2}; adjacent orbit vertices exercise
    // the evolving-neighbourhood path
    const auto& orbit = p.vertex_orbits[static_cast<std::size_t>(
        p.vertex_orbit_of[1])];
    REQUIRE(orbit.size() == 2);
    const FowlerResult fr = fowler_with_layout(s1, orbit);
    CHECK(fr.graph.order() == 7 + 2 * 2 * 2);
    CHECK(is_nut(fr.graph));
}

TEST_CASE("coalescence") {
    const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
    CHECK(s1 == fuse_at(cycle(3), 0, cycle(5), 0));
    CHECK(is_nut(s1));

    Graph g = s1;
    for (int step = 0; step < 2; ++step) {
        g = coalesce_triangle_pentagon(g, 0);
        CHECK(is_nut(g));
    }
    CHECK(g.order() == 19);

    CHECK_THROWS_AS(coalesce_triangle_pentagon(s1, 9), index_out_of_range);
}

TEST_CASE("coalescence preserves nullity on random small graphs") {
    oracle::Rng rng(77);
    const auto pool = enumerate_connected(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph& g =
            pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
        const int v = rng.below(g.order());
        CHECK(nullity(coalesce_triangle_pentagon(g, v)).eta == nullity(g).eta);
    }
}

TEST_CASE("two-orbit nut dispatch") {
    CHECK(two_orbit_nut(10) == rose_window(5, 1, 2));
    CHECK(two_orbit_nut(9) == triangle_cycle(3));
    CHECK(two_orbit_nut(25) == multiplier(circulant(5, {1, 2}), 3));
    CHECK(canonical_form(circulant(5, {1, 2})) == canonical_form(complete(5)));

    CHECK_THROWS_AS(two_orbit_nut(11), prime_order);
    CHECK_THROWS_AS(two_orbit_nut(59), prime_order);
    CHECK_THROWS_AS(two_orbit_nut(8), order_too_small);
}

TEST_CASE("multiplier on dihedral circulants realizes the prescribed orbit pairs") {
    // M_{4q-1}(Circ(n, {1..k})) has o_v = 2q and o_e = k + 2q
    for (int q : {1, 2}) {
        const int cycle_len = 4 * q - 1;
        for (int k = 1; k <= 3; ++k)
            for (int n = 2 * k + 3; n <= 2 * k + 8; ++n) {
                std::set<int> conn;
                for (int s = 1; s <= k; ++s) conn.insert(s);
                const Graph m = multiplier(circulant(n, conn), cycle_len);
                const OrbitSignature sig = omega(m);
                CHECK(sig.ov == 2 * q);
                CHECK(sig.oe == k + 2 * q);
                if (m.order() <= 100) CHECK(is_nut(m));
            }
    }
}

TEST_CASE("two-orbit nut graphs verify on a spot range") {
    for (int n : {9, 10, 12, 15, 21, 25, 35}) {
        const Graph g = two_orbit_nut(n);
        CHECK(g.order() == n);
        CHECK(is_nut(g));
        CHECK(omega(g).ov == 2);
    }
}
