#include "nutkit/orbits.hpp"

#include <algorithm>
#include <map>

namespace nutkit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

} // namespace

std::pair<OrbitPartition, OrbitSignature> orbits(const Graph& g, const AutGroup& a) {
    if (a.degree != g.order()) throw mismatched_group("group degree differs from graph order");
    const int n = g.order();
    const int m = g.edge_count();

    UnionFind vuf(n);
    for (const Permutation& s : a.generators)
        for (int v = 0; v < n; ++v) vuf.unite(v, s(v));

    std::map<Edge, int> eidx;
    for (int i = 0; i < m; ++i) eidx.emplace(g.edges()[static_cast<std::size_t>(i)], i);
    UnionFind euf(m);
    for (const Permutation& s : a.generators)
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edges()[static_cast<std::size_t>(i)];
            euf.unite(i, eidx.at(Edge(s(e.u), s(e.v))));
        }

    OrbitPartition p;
    p.vertex_orbit_of.assign(static_cast<std::size_t>(n), -1);
    std::map<int, int> vclass;
    for (int v = 0; v < n; ++v) {
        const int r = vuf.find(v);
        auto [it, fresh] = vclass.emplace(r, static_cast<int>(p.vertex_orbits.size()));
        if (fresh) p.vertex_orbits.emplace_back();
        p.vertex_orbit_of[static_cast<std::size_t>(v)] = it->second;
        p.vertex_orbits[static_cast<std::size_t>(it->second)].push_back(v);
    }
    p.edge_orbit_of.assign(static_cast<std::size_t>(m), -1);
    std::map<int, int> eclass;
    for (int i = 0; i < m; ++i) {
        const int r = euf.find(i);
        auto [it, fresh] = eclass.emplace(r, static_cast<int>(p.edge_orbits.size()));
        if (fresh) p.edge_orbits.emplace_back();
        p.edge_orbit_of[static_cast<std::size_t>(i)] = it->second;
        p.edge_orbits[static_cast<std::size_t>(it->second)].push_back(
            g.edges()[static_cast<std::size_t>(i)]);
    }

    OrbitSignature sig;
    sig.ov = static_cast<int>(p.vertex_orbits.size());
    sig.oe = static_cast<int>(p.edge_orbits.size());
    sig.aut_order = a.order();
    return {std::move(p), std::move(sig)};
}

int VertexOrbitGraph::quotient_degree(int i) const {
    int deg = 0;
    for (int j = 0; j < k; ++j)
        if (adjacent(i, j)) ++deg;
    return deg;
}

bool VertexOrbitGraph::is_cycle() const {
    if (k < 3) return false;
    for (int i = 0; i < k; ++i)
        if (quotient_degree(i) != 2) return false;
    // connected 2-regular quotient on k nodes is a single k-cycle
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j)
            if (adjacent(i, j) && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == k;
}

VertexOrbitGraph vertex_orbit_graph(const Graph& g, const OrbitPartition& p) {
    VertexOrbitGraph q;
    q.k = static_cast<int>(p.vertex_orbits.size());
    q.d.assign(static_cast<std::size_t>(q.k),
               std::vector<int>(static_cast<std::size_t>(q.k), 0));
    q.intra.assign(static_cast<std::size_t>(q.k), 0);

    for (int i = 0; i < q.k; ++i) {
        bool first = true;
        for (int v : p.vertex_orbits[static_cast<std::size_t>(i)]) {
            std::vector<int> row(static_cast<std::size_t>(q.k), 0);
            for (int u : g.neighbours(v))
                ++row[static_cast<std::size_t>(p.vertex_orbit_of[static_cast<std::size_t>(u)])];
            if (first) {
                q.d[static_cast<std::size_t>(i)] = row;
                first = false;
            } else if (q.d[static_cast<std::size_t>(i)] != row) {
                throw inconsistent_orbit_degrees(
                    "inter-orbit degree is not constant on an orbit");
            }
        }
        q.intra[static_cast<std::size_t>(i)] =
            q.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] > 0;
    }
    return q;
}

bool has_sign_reversing_automorphism(const Graph& g, const KernelVector& x, const AutGroup& a) {
    if (a.degree != g.order()) throw mismatched_group("group degree differs from graph order");
    if (static_cast<int>(x.size()) != g.order())
        throw not_nut_graph("kernel vector length mismatch");
    for (const Int& v : x)
        if (v.is_zero()) throw not_nut_graph("kernel vector is not full");
    for (const Int& v : adjacency_matrix(g).multiply(x))
        if (!v.is_zero()) throw not_nut_graph("vector is not in the kernel");

    for (const Permutation& s : a.generators) {
        // each automorphism maps x to +x or -x; anything else means the
        // kernel is not one-dimensional
        int sign = 0;
        if (x[static_cast<std::size_t>(s(0))] == x[0])
            sign = 1;
        else if (x[static_cast<std::size_t>(s(0))] == -x[0])
            sign = -1;
        else
            throw not_nut_graph("automorphism does not preserve the kernel line");
        for (int v = 1; v < g.order(); ++v) {
            const Int expect = sign > 0 ? x[static_cast<std::size_t>(v)]
                                        : Int(-x[static_cast<std::size_t>(v)]);
            if (x[static_cast<std::size_t>(s(v))] != expect)
                throw not_nut_graph("automorphism does not preserve the kernel line");
        }
        if (sign < 0) return true;
    }
    return false;
}

std::pair<int, std::vector<std::vector<int>>> stabilizer_orbit_counts(const Graph& g, int v,
                                                                      const AutGroup& a) {
    if (v < 0 || v >= g.order()) throw index_out_of_range("vertex id out of range");
    if (a.degree != g.order()) throw mismatched_group("group degree differs from graph order");
    const std::vector<Permutation> stab = stabilizer_generators(a, v);
    UnionFind uf(g.order());
    for (const Permutation& s : stab)
        for (int u = 0; u < g.order(); ++u) uf.unite(u, s(u));
    std::map<int, std::vector<int>> classes;
    for (int u : g.neighbours(v)) classes[uf.find(u)].push_back(u);
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    std::vector<std::pair<int, std::vector<int>>> items(classes.begin(), classes.end());
    std::sort(items.begin(), items.end(),
              [](const auto& l, const auto& r) { return l.second.front() < r.second.front(); });
    for (auto& [root, members] : items) out.push_back(std::move(members));
    return {static_cast<int>(out.size()), std::move(out)};
}

} // namespace nutkit
