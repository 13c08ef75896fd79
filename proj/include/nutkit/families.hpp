#pragma once

#include <set>
#include <string>
#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

// named graphs from the standard repertoire
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph hypercube(int d);
Graph complete_bipartite(int m); // K_{m,m}

/// Circulant on Z_n: i ~ j iff the cyclic distance min(|i-j|, n-|i-j|) is in S.
Graph circulant(int n, const std::set<int>& connection);

/// Antiprism A_l of order 2l, labelled as circulant(2l, {1,2}): even labels
/// form one l-cycle, odd labels the other, steps of 1 are the zigzag.
Graph antiprism(int l);

/// C3 x C_l cartesian product; vertex (i, j) gets label i*l + j.
Graph c3_cart_cycle(int l);

/// Twisted product: the cartesian product with the rungs between cycle layers
/// 0 and 1 shifted one step: edges (i,0)-(i,1) are replaced by (i,0)-(i+1,1).
Graph c3_twist_cycle(int l);

/// n-cycle with a triangle fused to every cycle vertex; order 3n. The
/// triangle-top pair of cycle vertex v is {n + 2v, n + 2v + 1}, which makes
/// this graph identical to multiplier(cycle(n), 3).
Graph triangle_cycle(int n);

/// Rose Window graph R_n(a, r): rim v_i = i, hub u_i = n + i,
/// edges v_i v_{i+1}, u_i u_{i+r}, u_i v_i, u_i v_{i+a}.
Graph rose_window(int n, int a, int r);

/// Fixed sporadic fixtures: tetracirculant16, ncvt30, grr12, phi5_d3.
Graph sporadic(const std::string& name);
std::vector<std::string> sporadic_names();

/// Family tag + parameters, the addressing scheme used by the CLI.
struct FamilySpec {
    std::string family;
    std::vector<long long> params;
    std::string name; // for sporadics
};

Graph make_family(const FamilySpec& spec);
std::vector<std::string> family_names();

} // namespace nutkit
