#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nutkit/constructions.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/orbits.hpp"

namespace nutkit {

enum class CheckStatus { pass, fail, not_applicable, premise_not_met, formula_only };

std::string to_string(CheckStatus s);

/// One checked claim on one instance. Failing reports always carry enough
/// witness data (graph6 string and parameters) to reproduce the instance.
struct VerificationReport {
    std::string claim;
    std::string instance;
    CheckStatus status = CheckStatus::pass;
    nlohmann::json witness;

    bool ok() const { return status != CheckStatus::fail; }
    nlohmann::json to_json() const;
};

/// o_e >= o_v + 1 for nut graphs, with the edge-type refinement
/// (intra/inter, like/unlike) reported alongside.
VerificationReport check_orbit_inequality(const Graph& g);

/// Degree/order congruences and the balanced +-1 kernel vector of
/// vertex-transitive nut graphs.
VerificationReport check_vt_nut_conditions(const Graph& g);

/// Zero orbit sums under the independent-leaf-orbit premise (or the
/// all-independent odd-cycle quotient premise); constancy of kernel entries
/// within orbits for odd order.
VerificationReport check_orbit_sums(const Graph& g);

/// Orbit and group-order formulas of the k-cycle multiplier, compared against
/// direct computation when the constructed graph has at most 200 vertices
/// (formula-only mode beyond that).
VerificationReport check_multiplier_symmetry(const Graph& g, int k);

/// |Aut(Circ(n, {1..k}))| = 2n for n >= 2k+3, with the two boundary orders
/// (2k+1)! and 2^(k+1) (k+1)!.
std::vector<VerificationReport> check_circulant_dihedral(int k, int n_from, int n_to);

enum class ConstructionKind { bridge, subdivision, fowler };

struct ConstructionDelta {
    OrbitSignature before;
    OrbitSignature after;
    int t = -1;   // stabilizer orbits on N(v); fowler only
    int tau = -1; // stabilizer orbits on the gadget pairs; fowler only
    int phi = 0;  // o_e(after) - o_e(before)
    bool group_preserved = false;
    bool swap_endpoints = false; // bridge/subdivision only
    Graph result;
};

/// Apply a construction to the full orbit of the target (edge {a, b} for
/// bridge/subdivision, vertex a for fowler), compute the before/after orbit
/// signatures, and assert the orbit-delta equalities whenever the group order
/// is preserved.
std::pair<ConstructionDelta, VerificationReport>
check_construction_delta(const Graph& g, ConstructionKind which, int a, int b = -1);

/// Over all enumerated nut graphs of prime order <= n_max (n_max <= 8),
/// assert that none has exactly two vertex orbits.
VerificationReport check_two_orbit_prime_exclusion(int n_max);

} // namespace nutkit
