#pragma once

#include <vector>

#include "nutkit/exact.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/perm.hpp"

namespace nutkit {

/// Base-and-strong-generating-set structure (Schreier-Sims). Supports exact
/// group order, membership tests, and pointwise-stabilizer extraction via a
/// forced base prefix.
class StabilizerChain {
public:
    StabilizerChain() = default;
    /// Base points in `forced_prefix` are installed first (useful for
    /// stabilizer extraction); further base points are chosen greedily on a
    /// longest cycle of the failing residue.
    StabilizerChain(int degree, const std::vector<Permutation>& generators,
                    std::vector<int> forced_prefix = {});

    int degree() const { return degree_; }
    const std::vector<int>& base() const { return base_; }
    Int order() const;
    bool contains(const Permutation& p) const;

    int levels() const { return static_cast<int>(base_.size()); }
    /// Generators of the pointwise stabilizer of base[0..k-1].
    const std::vector<Permutation>& level_generators(int k) const {
        return gens_[static_cast<std::size_t>(k)];
    }
    const std::vector<int>& level_orbit(int k) const {
        return orbit_[static_cast<std::size_t>(k)];
    }
    bool in_level_orbit(int k, int point) const {
        return !trans_[static_cast<std::size_t>(k)][static_cast<std::size_t>(point)]
                    .images()
                    .empty();
    }
    /// Transversal element mapping base[k] to `point`.
    const Permutation& transversal(int k, int point) const {
        return trans_[static_cast<std::size_t>(k)][static_cast<std::size_t>(point)];
    }

    /// Returns true when the group grew.
    bool add_generator(const Permutation& g);

private:
    void ensure_level(int k);
    void recompute_orbit(int level);
    void schreier_sims(int level);
    std::pair<int, Permutation> strip(Permutation h, int from_level) const;
    void append_base_point(const Permutation& residue);

    int degree_ = 0;
    std::vector<int> base_;
    std::vector<std::vector<Permutation>> gens_;
    std::vector<std::vector<Permutation>> trans_; // per level, indexed by point
    std::vector<std::vector<int>> orbit_;         // discovery order
};

/// Full automorphism group of a graph: generators discovered by the
/// refinement-and-backtracking search plus a stabilizer chain for exact order.
struct AutGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    StabilizerChain chain;

    Int order() const { return chain.order(); }
};

/// Deterministic automorphism group computation: equitable degree refinement,
/// backtracking on the smallest non-singleton cell, orbit and trace pruning.
AutGroup automorphism_group(const Graph& g);

/// True iff some automorphism maps u to v and v to u (coset test on a chain
/// rebased to start with u, v; no group enumeration).
bool has_swap_automorphism(const AutGroup& a, int u, int v);

/// Generators of the stabilizer of v (chain rebased so v is the first base
/// point).
std::vector<Permutation> stabilizer_generators(const AutGroup& a, int v);

} // namespace nutkit
