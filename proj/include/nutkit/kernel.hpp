#pragma once

#include <optional>
#include <vector>

#include "nutkit/exact.hpp"
#include "nutkit/graph.hpp"

namespace nutkit {

/// Exact nullity data of the adjacency matrix: eta = |basis|,
/// each basis vector primitive with positive leading entry.
struct NullityReport {
    int eta = 0;
    std::vector<IntVector> basis;
};

using KernelVector = IntVector;

NullityReport nullity(const Graph& g);

/// The unique primitive kernel vector when g is a nut graph, nullopt
/// otherwise. The isolated vertex K1 is classified as not a nut graph.
std::optional<KernelVector> nut_kernel(const Graph& g);
bool is_nut(const Graph& g);

/// A full kernel vector when g is a core graph (every vertex coordinate is
/// nonzero in some kernel vector), nullopt otherwise. K1 is not a core graph.
///
/// The witness is built deterministically: starting from the first basis
/// vector, fold in each further basis vector b as w <- lambda*w + b with the
/// smallest integer lambda >= 1 that cancels no coordinate.
std::optional<KernelVector> core_witness(const Graph& g);
bool is_core(const Graph& g);

enum class EdgeKind { like, unlike };

struct EdgeSignature {
    Edge e;
    int sign_u; // sign of the kernel entry at e.u, +1 or -1
    int sign_v;
    EdgeKind kind;
};

/// Per-edge sign classification for a full kernel vector, in canonical edge
/// order. Throws not_full_vector if x has a zero entry or is not in the
/// kernel of the adjacency matrix.
struct EdgeSignatureTable {
    std::vector<EdgeSignature> rows;
    int like_count = 0;
    int unlike_count = 0;
};

EdgeSignatureTable edge_signatures(const Graph& g, const KernelVector& x);

} // namespace nutkit
