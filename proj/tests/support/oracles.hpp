#pragma once

// Brute-force oracles kept independent of the library's algorithms: these
// re-derive group orders, ranks and determinants from first principles and
// exist only to cross-check the production code paths.

#include <algorithm>
#include <numeric>
#include <vector>

#include "nutkit/exact.hpp"
#include "nutkit/graph.hpp"

namespace oracle {

/// |Aut(g)| by checking all n! permutations. Feasible for n <= 7.
inline long long aut_order_factorial(const nutkit::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (const nutkit::Edge& e : g.edges())
            if (!g.adjacent(perm[static_cast<std::size_t>(e.u)],
                            perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// |Aut(g)| by exhaustive vertex-by-vertex backtracking with adjacency
/// consistency pruning (no partition refinement). Feasible for n <= 9.
inline long long aut_order_backtrack(const nutkit::Graph& g) {
    const int n = g.order();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (g.degree(v) != g.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) !=
                    g.adjacent(image[static_cast<std::size_t>(u)], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            self(self, v + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

/// Vertex and edge orbit counts from the full list of automorphisms found by
/// the n! scan (independent of the generator-closure path).
inline std::pair<int, int> orbit_counts_factorial(const nutkit::Graph& g) {
    const int n = g.order();
    std::vector<int> vparent(static_cast<std::size_t>(n));
    std::iota(vparent.begin(), vparent.end(), 0);
    const auto& edges = g.edges();
    std::vector<int> eparent(edges.size());
    std::iota(eparent.begin(), eparent.end(), 0);
    auto find = [](std::vector<int>& par, int x) {
        while (par[static_cast<std::size_t>(x)] != x) x = par[static_cast<std::size_t>(x)];
        return x;
    };
    auto edge_index = [&](const nutkit::Edge& e) {
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) -
                                edges.begin());
    };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const nutkit::Edge& e : edges)
            if (!g.adjacent(perm[static_cast<std::size_t>(e.u)],
                            perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v = 0; v < n; ++v) {
            const int a = find(vparent, v), b = find(vparent, perm[static_cast<std::size_t>(v)]);
            if (a != b) vparent[static_cast<std::size_t>(a)] = b;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const nutkit::Edge img(perm[static_cast<std::size_t>(edges[i].u)],
                                   perm[static_cast<std::size_t>(edges[i].v)]);
            const int a = find(eparent, static_cast<int>(i));
            const int b = find(eparent, edge_index(img));
            if (a != b) eparent[static_cast<std::size_t>(a)] = b;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    int ov = 0, oe = 0;
    for (int v = 0; v < n; ++v)
        if (find(vparent, v) == v) ++ov;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (find(eparent, static_cast<int>(i)) == static_cast<int>(i)) ++oe;
    return {ov, oe};
}

/// Determinant by cofactor expansion along the first row. Exponential; for
/// small matrices only.
inline nutkit::Int det_cofactor(const nutkit::IntMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    nutkit::Int det = 0;
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        nutkit::IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, cc++) = m.at(i, j);
            }
        }
        const nutkit::Int term = m.at(0, c) * det_cofactor(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

/// Rank by plain rational Gaussian elimination (first nonzero pivot, no
/// fraction-free tricks); independent of the Bareiss path.
inline int rank_rational(const nutkit::IntMatrix& m) {
    using nutkit::Rat;
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(m.at(i, j));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) continue;
            const Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            for (int j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

/// Deterministic 64-bit mixer for reproducible pseudo-random test data.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace oracle
