#include <doctest.h>

#include "nutkit/constructions.hpp"
#include "nutkit/enumerate.hpp"
#include "nutkit/families.hpp"
#include "nutkit/kernel.hpp"

using namespace nutkit;

namespace {
const Graph s1 = coalesce_triangle_pentagon(complete(1), 0);
}

TEST_CASE("nullity fixtures") {
    CHECK(nullity(cycle(4)).eta == 2);
    CHECK(nullity(cycle(6)).eta == 0);
    CHECK(nullity(complete(1)).eta == 1);
    CHECK(nullity(rose_window(6, 1, 2)).eta == 3);
    CHECK(nullity(path(3)).eta == 1);
}

TEST_CASE("is_nut") {
    CHECK(is_nut(s1));
    CHECK_FALSE(is_nut(cycle(7)));   // cycles are never nut graphs
    CHECK_FALSE(is_nut(cycle(6)));
    CHECK_FALSE(is_nut(complete_bipartite(3)));
    CHECK_FALSE(is_nut(complete(1))); // trivial case excluded
    CHECK_FALSE(is_nut(Graph(3)));
    CHECK_FALSE(is_nut(Graph(0)));

    const auto witness = nut_kernel(s1);
    REQUIRE(witness.has_value());
    for (const Int& x : *witness) CHECK_FALSE(x.is_zero());
    for (const Int& y : adjacency_matrix(s1).multiply(*witness)) CHECK(y.is_zero());
    CHECK((*witness)[0] > 0); // canonical sign
}

TEST_CASE("is_core") {
    CHECK(is_core(rose_window(6, 1, 2))); // nullity 3 but full vectors exist
    CHECK_FALSE(is_nut(rose_window(6, 1, 2)));
    CHECK_FALSE(is_core(path(3))); // middle coordinate vanishes on the kernel
    CHECK_FALSE(is_core(complete(1)));
    CHECK(is_core(s1)); // every nut graph is a core graph

    const auto witness = core_witness(rose_window(6, 1, 2));
    REQUIRE(witness.has_value());
    for (const Int& x : *witness) CHECK_FALSE(x.is_zero());
    for (const Int& y : adjacency_matrix(rose_window(6, 1, 2)).multiply(*witness))
        CHECK(y.is_zero());
}

TEST_CASE("nut implies core on enumerated graphs") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n))
            if (is_nut(g)) {
                CHECK(is_core(g));
                CHECK(g.is_connected());
                CHECK_FALSE(g.is_bipartite());
                CHECK(g.min_degree() >= 2);
            }
}

TEST_CASE("edge signatures of the triangle cycle") {
    const Graph t3 = triangle_cycle(3);
    const auto x = nut_kernel(t3);
    REQUIRE(x.has_value());
    const EdgeSignatureTable table = edge_signatures(t3, *x);
    CHECK(table.like_count + table.unlike_count == t3.edge_count());
    for (const EdgeSignature& row : table.rows) {
        const bool spoke = row.e.u < 3 && row.e.v >= 3; // cycle vertex to triangle top
        if (spoke)
            CHECK(row.kind == EdgeKind::unlike);
        else
            CHECK(row.kind == EdgeKind::like); // cycle edges and top-top edges
    }
}

TEST_CASE("edge signatures of S1 have both classes") {
    const auto x = nut_kernel(s1);
    const EdgeSignatureTable table = edge_signatures(s1, *x);
    CHECK(table.like_count > 0);
    CHECK(table.unlike_count > 0);
}

TEST_CASE("every vertex of a nut graph has an unlike incident edge") {
    for (const NutRecord& r : enumerate_nut(7)) {
        const EdgeSignatureTable table = edge_signatures(r.graph, r.report.basis.front());
        std::vector<int> unlike_at(static_cast<std::size_t>(r.graph.order()), 0);
        for (const EdgeSignature& row : table.rows)
            if (row.kind == EdgeKind::unlike) {
                unlike_at[static_cast<std::size_t>(row.e.u)]++;
                unlike_at[static_cast<std::size_t>(row.e.v)]++;
            }
        for (int v = 0; v < r.graph.order(); ++v) CHECK(unlike_at[static_cast<std::size_t>(v)] > 0);
    }
}

TEST_CASE("edge_signatures rejects bad vectors") {
    const auto x = nut_kernel(s1);
    KernelVector zeroed = *x;
    zeroed[3] = 0;
    CHECK_THROWS_AS(edge_signatures(s1, zeroed), not_full_vector);
    KernelVector shifted = *x;
    shifted[0] += 1;
    CHECK_THROWS_AS(edge_signatures(s1, shifted), not_full_vector);
}
