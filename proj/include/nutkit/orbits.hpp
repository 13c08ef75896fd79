#pragma once

#include <vector>

#include "nutkit/aut.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"

namespace nutkit {

/// Vertex and edge orbits under the closure of a generator set.
/// Classes are listed by ascending minimum element, each class sorted.
struct OrbitPartition {
    std::vector<std::vector<int>> vertex_orbits;
    std::vector<int> vertex_orbit_of; // vertex -> class index
    std::vector<std::vector<Edge>> edge_orbits;
    std::vector<int> edge_orbit_of; // index into g.edges() -> class index
};

/// The triple Omega(G) = (o_v, o_e, |Aut(G)|).
struct OrbitSignature {
    int ov = 0;
    int oe = 0;
    Int aut_order = 1;

    bool operator==(const OrbitSignature&) const = default;
};

std::pair<OrbitPartition, OrbitSignature> orbits(const Graph& g, const AutGroup& a);

/// Quotient structure on vertex orbits with the inter-orbit degree table:
/// d[i][j] = number of neighbours in orbit j of any vertex of orbit i.
/// Well-definedness of d is verified during construction.
struct VertexOrbitGraph {
    int k = 0;
    std::vector<std::vector<int>> d;
    std::vector<char> intra; // orbit has an internal edge

    bool adjacent(int i, int j) const { return i != j && d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0; }
    int quotient_degree(int i) const;
    bool is_leaf(int i) const { return quotient_degree(i) == 1; }
    /// True when the quotient is a single cycle through all k nodes.
    bool is_cycle() const;
};

VertexOrbitGraph vertex_orbit_graph(const Graph& g, const OrbitPartition& p);

/// True iff some automorphism alpha satisfies x(alpha(v)) = -x(v) for all v.
/// Since the kernel is one-dimensional each automorphism sends x to +-x, so
/// the sign is a homomorphism to {+1,-1} and testing generators suffices.
bool has_sign_reversing_automorphism(const Graph& g, const KernelVector& x, const AutGroup& a);

/// Orbits of the vertex stabilizer Aut(g)_v restricted to N(v):
/// t = number of classes, plus the classes themselves.
std::pair<int, std::vector<std::vector<int>>> stabilizer_orbit_counts(const Graph& g, int v,
                                                                      const AutGroup& a);

} // namespace nutkit
