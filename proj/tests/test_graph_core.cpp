#include <doctest.h>

#include <algorithm>

#include "nutkit/enumerate.hpp"
#include "nutkit/families.hpp"
#include "nutkit/graph.hpp"
#include "support/oracles.hpp"

using namespace nutkit;

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Edge(3, 3), invalid_graph);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 1), Edge(1, 0)}), invalid_graph);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), invalid_graph);
    const Graph g(4, {Edge(0, 1), Edge(2, 3)});
    CHECK(g.degree(0) == 1);
    CHECK_FALSE(g.is_connected());
    CHECK(g.is_bipartite());
    CHECK(cycle(5).is_connected());
    CHECK_FALSE(cycle(5).is_bipartite());
}

TEST_CASE("cartesian product shape and labelling") {
    const Graph p = cartesian_product(cycle(3), cycle(4));
    CHECK(p.order() == 12);
    CHECK(p.edge_count() == 24); // 4-regular on 12 vertices
    int d = 0;
    CHECK(p.is_regular(&d));
    CHECK(d == 4);
    // (a, x) has label a*4 + x: (0,0)-(1,0) from the C3 edge, (0,0)-(0,1) from C4
    CHECK(p.adjacent(0, 4));
    CHECK(p.adjacent(0, 1));
    CHECK_FALSE(p.adjacent(0, 5));

    // K1 x H is identical to H under the labelling rule
    CHECK(cartesian_product(complete(1), cycle(5)) == cycle(5));
}

TEST_CASE("cartesian product commutes up to isomorphism") {
    const Graph a = cartesian_product(cycle(3), path(4));
    const Graph b = cartesian_product(path(4), cycle(3));
    CHECK(canonical_form(a) == canonical_form(b));
    const Graph c = cartesian_product(complete(2), cycle(5));
    const Graph d = cartesian_product(cycle(5), complete(2));
    CHECK(canonical_form(c) == canonical_form(d));
}

TEST_CASE("fuse_at") {
    // triangle + pentagon fused at a vertex is the 7-vertex nut graph S1
    const Graph s1 = fuse_at(cycle(3), 0, cycle(5), 0);
    CHECK(s1.order() == 7);
    CHECK(s1.edge_count() == 8);
    CHECK(s1.degree(0) == 4);

    CHECK(fuse_at(complete(1), 0, cycle(6), 0) == cycle(6));
    CHECK(canonical_form(fuse_at(complete(1), 0, cycle(6), 2)) == canonical_form(cycle(6)));

    const Graph f = fuse_at(cycle(4), 1, path(3), 2);
    CHECK(f.order() == 6);
    CHECK(f.degree(1) == cycle(4).degree(1) + path(3).degree(2));

    CHECK_THROWS_AS(fuse_at(cycle(3), 5, cycle(3), 0), index_out_of_range);
}

TEST_CASE("subdivide_edge") {
    CHECK(canonical_form(subdivide_edge(cycle(3), Edge(0, 1), 2)) == canonical_form(cycle(5)));
    CHECK(canonical_form(subdivide_edge(complete(2), Edge(0, 1), 1)) ==
          canonical_form(path(3)));
    const Graph g = subdivide_edge(complete(4), Edge(1, 2), 4);
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == complete(4).edge_count() + 4);
    CHECK_THROWS_AS(subdivide_edge(path(3), Edge(0, 2), 1), edge_not_present);
}

TEST_CASE("operations preserve simplicity on random inputs") {
    oracle::Rng rng(42);
    const auto pool = enumerate_connected(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph& g = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
        const Graph& h = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
        const Graph fused = fuse_at(g, rng.below(g.order()), h, rng.below(h.order()));
        CHECK(fused.order() == g.order() + h.order() - 1);
        // Graph construction itself rejects loops and duplicate edges, so
        // reaching here is the property
        const Edge e = g.edges()[static_cast<std::size_t>(
            rng.below(static_cast<int>(g.edges().size())))];
        const Graph sub = subdivide_edge(g, e, 1 + rng.below(4));
        CHECK(sub.min_degree() >= std::min(2, g.min_degree()));
    }
}

TEST_CASE("bridge detection") {
    CHECK(path(3).is_bridge(Edge(0, 1)));
    CHECK_FALSE(cycle(4).is_bridge(Edge(0, 1)));
    const Graph two_triangles = fuse_at(cycle(3), 0, cycle(3), 0);
    for (const Edge& e : two_triangles.edges()) CHECK_FALSE(two_triangles.is_bridge(e));
}
