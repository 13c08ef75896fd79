#pragma once

#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Fuse a bouquet of r disjoint k-cycles (k odd, >= 3) to every vertex of a
/// connected 2r-regular graph. New path vertices are appended per vertex in
/// ascending order, per cycle, in path order. The output is a nut graph when
/// k = 3 (mod 4), or when k = 1 (mod 4) and the base is bipartite; use
/// multiplier_nut_guaranteed to query the hypothesis.
Graph multiplier(const Graph& g, int k);
bool multiplier_nut_guaranteed(const Graph& g, int k);

/// Insert two vertices on every edge of a full edge orbit of bridges.
/// New labels n+2i, n+2i+1 per orbit edge i (canonical edge order), the even
/// one adjacent to the lower endpoint.
Graph bridge_construction(const Graph& g, const std::vector<Edge>& orbit);

/// Insert four vertices on every edge of a full edge orbit; labels n+4i..n+4i+3
/// per orbit edge, walked from the lower endpoint.
Graph subdivision_construction(const Graph& g, const std::vector<Edge>& orbit);

/// Per-vertex gadget bookkeeping for the expansion construction.
struct FowlerGadget {
    int v;
    std::vector<int> u; // attachment neighbours, ascending, at processing time
    std::vector<int> w; // w_i adjacent to v
    std::vector<int> x; // x_i adjacent to u_i and to every w_j with j != i
};

struct FowlerResult {
    Graph graph;
    std::vector<FowlerGadget> gadgets; // per orbit vertex, ascending
};

/// Degree-preserving expansion applied to every vertex of a full vertex
/// orbit, processed in ascending label order on the evolving graph.
FowlerResult fowler_with_layout(const Graph& g, const std::vector<int>& orbit);
Graph fowler(const Graph& g, const std::vector<int>& orbit);

/// Hang a triangle (2 new vertices) and a pentagon (4 new vertices) on v.
/// Preserves the nullity of the host graph.
Graph coalesce_triangle_pentagon(const Graph& g, int v);

/// A nut graph of composite order n >= 9 with exactly two vertex orbits:
/// rose window for even n with 3 not dividing n, triangle cycle for multiples
/// of 3, and the triangle multiplier of a circulant otherwise.
Graph two_orbit_nut(int n);

} // namespace nutkit
