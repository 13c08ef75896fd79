#include "nutkit/kernel.hpp"

#include <algorithm>
#include <set>

namespace nutkit {

NullityReport nullity(const Graph& g) {
    NullityReport r;
    r.basis = kernel_basis(adjacency_matrix(g));
    r.eta = static_cast<int>(r.basis.size());
    return r;
}

std::optional<KernelVector> nut_kernel(const Graph& g) {
    if (g.order() <= 1) return std::nullopt; // K1 and the empty graph are trivial
    NullityReport r = nullity(g);
    if (r.eta != 1) return std::nullopt;
    const IntVector& v = r.basis.front();
    for (const Int& x : v)
        if (x.is_zero()) return std::nullopt;
    return v;
}

bool is_nut(const Graph& g) { return nut_kernel(g).has_value(); }

std::optional<KernelVector> core_witness(const Graph& g) {
    if (g.order() <= 1) return std::nullopt;
    NullityReport r = nullity(g);
    if (r.eta == 0) return std::nullopt;
    // every coordinate must be nonzero in some basis vector
    for (int c = 0; c < g.order(); ++c) {
        bool hit = false;
        for (const IntVector& b : r.basis)
            if (!b[static_cast<std::size_t>(c)].is_zero()) {
                hit = true;
                break;
            }
        if (!hit) return std::nullopt;
    }
    IntVector w = r.basis.front();
    for (int i = 1; i < r.eta; ++i) {
        const IntVector& b = r.basis[static_cast<std::size_t>(i)];
        std::set<Int> forbidden; // lambda with lambda*w_j + b_j = 0 for some j
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j].is_zero()) continue;
            Int num = -b[j];
            if (num % w[j] == 0) {
                Int lam = num / w[j];
                if (lam >= 1) forbidden.insert(lam);
            }
        }
        Int lambda = 1;
        while (forbidden.count(lambda)) ++lambda;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = lambda * w[j] + b[j];
    }
    return normalize_primitive(std::move(w));
}

bool is_core(const Graph& g) { return core_witness(g).has_value(); }

EdgeSignatureTable edge_signatures(const Graph& g, const KernelVector& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw not_full_vector("kernel vector length mismatch");
    for (const Int& v : x)
        if (v.is_zero()) throw not_full_vector("kernel vector has a zero entry");
    IntVector ax = adjacency_matrix(g).multiply(x);
    for (const Int& v : ax)
        if (!v.is_zero()) throw not_full_vector("vector is not in the kernel");

    EdgeSignatureTable t;
    t.rows.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        int su = x[static_cast<std::size_t>(e.u)] > 0 ? 1 : -1;
        int sv = x[static_cast<std::size_t>(e.v)] > 0 ? 1 : -1;
        EdgeKind k = su == sv ? EdgeKind::like : EdgeKind::unlike;
        t.rows.push_back({e, su, sv, k});
        (k == EdgeKind::like ? t.like_count : t.unlike_count)++;
    }
    return t;
}

} // namespace nutkit
