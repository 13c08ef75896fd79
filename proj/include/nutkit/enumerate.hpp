#pragma once

#include <string>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/orbits.hpp"
#include "nutkit/perm.hpp"

namespace nutkit {

/// Byte string identifying the isomorphism class: the lexicographically
/// smallest graph6 encoding over all relabellings (internal canon, not
/// promised to match external tools). Supported for order <= 64.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);
/// The relabelling (vertex -> position) that realizes canonical_form.
Permutation canonical_labelling(const Graph& g);

/// One representative per isomorphism class of connected simple graphs on n
/// vertices, n <= 8, sorted by canonical form. Generation is orderly edge
/// augmentation: a child is kept only when the added edge lies in the orbit
/// of the canonical-form-designated deletion edge.
std::vector<Graph> enumerate_connected(int n);

struct NutRecord {
    Graph graph;
    NullityReport report;
    OrbitSignature omega;
};

/// All nut graphs on n vertices up to isomorphism (n <= 8), with nullity and
/// orbit data attached.
std::vector<NutRecord> enumerate_nut(int n);

} // namespace nutkit
