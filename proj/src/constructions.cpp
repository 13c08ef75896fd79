#include "nutkit/constructions.hpp"

#include <algorithm>
#include <set>

#include "nutkit/aut.hpp"
#include "nutkit/families.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/orbits.hpp"

namespace nutkit {

Graph multiplier(const Graph& g, int k) {
    int d = 0;
    if (!g.is_regular(&d)) throw not_regular("multiplier requires a regular base graph");
    if (d == 0 || d % 2 != 0) throw odd_degree("multiplier requires even positive degree");
    if (!g.is_connected()) throw not_regular("multiplier requires a connected base graph");
    if (k < 3 || k % 2 == 0)
        throw even_cycle_length("fused cycle length must be an odd integer >= 3");
    const int r = d / 2;
    const int n = g.order();
    if (static_cast<long long>(n) * (1 + static_cast<long long>(r) * (k - 1)) > 1000000)
        throw invalid_graph("multiplier order overflow");
    std::vector<Edge> es(g.edges());
    int next = n;
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < r; ++c) {
            const int first = next;
            es.emplace_back(v, first);
            for (int i = 1; i < k - 1; ++i) es.emplace_back(first + i - 1, first + i);
            es.emplace_back(first + k - 2, v);
            next += k - 1;
        }
    }
    return Graph(next, std::move(es));
}

bool multiplier_nut_guaranteed(const Graph& g, int k) {
    if (k % 4 == 3) return true;
    return g.is_bipartite();
}

namespace {

/// The orbit set must be exactly the edge orbit of its first element.
void check_full_edge_orbit(const Graph& g, const std::vector<Edge>& orbit) {
    if (orbit.empty()) throw not_full_orbit("empty edge orbit");
    for (const Edge& e : orbit)
        if (!g.has_edge(e)) throw edge_not_present("orbit edge not in graph");
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    (void)sig;
    int idx = -1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges()[static_cast<std::size_t>(i)] == orbit.front()) {
            idx = i;
            break;
        }
    const auto& cls = p.edge_orbits[static_cast<std::size_t>(
        p.edge_orbit_of[static_cast<std::size_t>(idx)])];
    std::vector<Edge> sorted_orbit(orbit);
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    sorted_orbit.erase(std::unique(sorted_orbit.begin(), sorted_orbit.end()),
                       sorted_orbit.end());
    if (sorted_orbit != cls)
        throw not_full_orbit("edge set is not a full orbit of the automorphism group");
}

void check_full_vertex_orbit(const Graph& g, const std::vector<int>& orbit) {
    if (orbit.empty()) throw not_full_orbit("empty vertex orbit");
    for (int v : orbit)
        if (v < 0 || v >= g.order()) throw index_out_of_range("orbit vertex out of range");
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    (void)sig;
    const auto& cls = p.vertex_orbits[static_cast<std::size_t>(
        p.vertex_orbit_of[static_cast<std::size_t>(orbit.front())])];
    std::vector<int> sorted_orbit(orbit);
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    sorted_orbit.erase(std::unique(sorted_orbit.begin(), sorted_orbit.end()),
                       sorted_orbit.end());
    if (sorted_orbit != cls)
        throw not_full_orbit("vertex set is not a full orbit of the automorphism group");
}

Graph insert_on_orbit(const Graph& g, const std::vector<Edge>& orbit, int k) {
    std::vector<Edge> sorted_orbit(orbit);
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    std::set<Edge> removed(sorted_orbit.begin(), sorted_orbit.end());
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!removed.count(e)) es.push_back(e);
    int next = g.order();
    for (const Edge& e : sorted_orbit) {
        es.emplace_back(e.u, next);
        for (int i = 1; i < k; ++i) es.emplace_back(next + i - 1, next + i);
        es.emplace_back(next + k - 1, e.v);
        next += k;
    }
    return Graph(next, std::move(es));
}

} // namespace

Graph bridge_construction(const Graph& g, const std::vector<Edge>& orbit) {
    if (!is_nut(g)) throw not_nut_graph("bridge construction requires a nut graph");
    check_full_edge_orbit(g, orbit);
    for (const Edge& e : orbit)
        if (!g.is_bridge(e)) throw not_bridge("orbit edge is not a bridge");
    return insert_on_orbit(g, orbit, 2);
}

Graph subdivision_construction(const Graph& g, const std::vector<Edge>& orbit) {
    if (!is_nut(g)) throw not_nut_graph("subdivision construction requires a nut graph");
    check_full_edge_orbit(g, orbit);
    return insert_on_orbit(g, orbit, 4);
}

FowlerResult fowler_with_layout(const Graph& g, const std::vector<int>& orbit) {
    if (!is_nut(g)) throw not_nut_graph("expansion construction requires a nut graph");
    check_full_vertex_orbit(g, orbit);
    std::vector<int> sorted_orbit(orbit);
    std::sort(sorted_orbit.begin(), sorted_orbit.end());

    // evolving adjacency, since orbit vertices may be adjacent to each other
    std::vector<std::set<int>> adj(static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    int next = g.order();
    FowlerResult out;
    for (int v : sorted_orbit) {
        FowlerGadget gad;
        gad.v = v;
        gad.u.assign(adj[static_cast<std::size_t>(v)].begin(),
                     adj[static_cast<std::size_t>(v)].end());
        const int d = static_cast<int>(gad.u.size());
        for (int u : gad.u) adj[static_cast<std::size_t>(u)].erase(v);
        adj[static_cast<std::size_t>(v)].clear();
        adj.resize(static_cast<std::size_t>(next + 2 * d));
        for (int i = 0; i < d; ++i) gad.w.push_back(next + i);
        for (int i = 0; i < d; ++i) gad.x.push_back(next + d + i);
        next += 2 * d;
        auto link = [&](int a, int b) {
            adj[static_cast<std::size_t>(a)].insert(b);
            adj[static_cast<std::size_t>(b)].insert(a);
        };
        for (int i = 0; i < d; ++i) {
            link(gad.x[static_cast<std::size_t>(i)], gad.u[static_cast<std::size_t>(i)]);
            link(gad.w[static_cast<std::size_t>(i)], v);
            for (int j = 0; j < d; ++j)
                if (i != j)
                    link(gad.x[static_cast<std::size_t>(i)], gad.w[static_cast<std::size_t>(j)]);
        }
        out.gadgets.push_back(std::move(gad));
    }
    std::vector<Edge> es;
    for (int v = 0; v < next; ++v)
        for (int u : adj[static_cast<std::size_t>(v)])
            if (v < u) es.emplace_back(v, u);
    out.graph = Graph(next, std::move(es));
    return out;
}

Graph fowler(const Graph& g, const std::vector<int>& orbit) {
    return fowler_with_layout(g, orbit).graph;
}

Graph coalesce_triangle_pentagon(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw index_out_of_range("vertex id out of range");
    const int n = g.order();
    std::vector<Edge> es(g.edges());
    // triangle on {n, n+1}
    es.emplace_back(v, n);
    es.emplace_back(v, n + 1);
    es.emplace_back(n, n + 1);
    // pentagon through n+2..n+5
    es.emplace_back(v, n + 2);
    es.emplace_back(n + 2, n + 3);
    es.emplace_back(n + 3, n + 4);
    es.emplace_back(n + 4, n + 5);
    es.emplace_back(n + 5, v);
    return Graph(n + 6, std::move(es));
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int smallest_prime_factor(int n) {
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

} // namespace

Graph two_orbit_nut(int n) {
    if (n < 9) throw order_too_small("two-orbit nut graphs require order >= 9");
    if (is_prime(n))
        throw prime_order("no nut graph of prime order has exactly two vertex orbits");
    if (n % 3 == 0) return triangle_cycle(n / 3);
    if (n % 2 == 0) return rose_window(n / 2, 1, 2);
    const int p1 = smallest_prime_factor(n); // odd, >= 5 here
    const int half = (p1 - 1) / 2;
    const int base_order = n / p1;
    // guaranteed for composite n with odd smallest factor; asserted, not assumed
    if (half < 1 || base_order < 2 * half + 1)
        throw order_too_small("no circulant base of the required order and degree exists");
    std::set<int> conn;
    for (int s = 1; s <= half; ++s) conn.insert(s);
    return multiplier(circulant(base_order, conn), 3);
}

} // namespace nutkit
