#include "nutkit/families.hpp"

#include <algorithm>

#include "nutkit/constructions.hpp"

namespace nutkit {

Graph complete(int n) {
    if (n < 1) throw parameter_too_small("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph cycle(int n) {
    if (n < 3) throw parameter_too_small("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path(int n) {
    if (n < 1) throw parameter_too_small("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph hypercube(int d) {
    if (d < 1) throw parameter_too_small("hypercube needs d >= 1");
    const int n = 1 << d;
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) es.emplace_back(v, v | (1 << b));
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int m) {
    if (m < 1) throw parameter_too_small("complete bipartite needs m >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) es.emplace_back(i, m + j);
    return Graph(2 * m, std::move(es));
}

Graph circulant(int n, const std::set<int>& connection) {
    if (n < 3) throw invalid_connection_set("circulant needs n >= 3");
    for (int s : connection)
        if (s < 1 || 2 * s > n)
            throw invalid_connection_set("connection values must satisfy 1 <= s <= n/2");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int s : connection) es.emplace_back(i, (i + s) % n);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n, std::move(es));
}

Graph antiprism(int l) {
    if (l < 3) throw parameter_too_small("antiprism needs l >= 3");
    return circulant(2 * l, {1, 2});
}

Graph c3_cart_cycle(int l) {
    if (l < 3) throw parameter_too_small("product cycle length must be >= 3");
    return cartesian_product(cycle(3), cycle(l));
}

Graph c3_twist_cycle(int l) {
    if (l < 3) throw parameter_too_small("twist cycle length must be >= 3");
    const Graph prod = c3_cart_cycle(l);
    std::vector<Edge> es;
    for (const Edge& e : prod.edges()) {
        const bool removed = [&] {
            for (int i = 0; i < 3; ++i)
                if (e == Edge(i * l + 0, i * l + 1)) return true;
            return false;
        }();
        if (!removed) es.push_back(e);
    }
    for (int i = 0; i < 3; ++i) es.emplace_back(i * l + 0, ((i + 1) % 3) * l + 1);
    return Graph(3 * l, std::move(es));
}

Graph triangle_cycle(int n) {
    if (n < 3) throw parameter_too_small("triangle cycle needs n >= 3");
    return multiplier(cycle(n), 3);
}

Graph rose_window(int n, int a, int r) {
    if (n < 3) throw degenerate_parameters("rose window needs n >= 3");
    if (a < 1 || a >= n || r < 1 || r >= n)
        throw degenerate_parameters("parameters must satisfy 1 <= a, r < n");
    if ((2 * r) % n == 0)
        throw degenerate_parameters("hub jumps collapse to parallel edges when 2r = 0 (mod n)");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);             // rim cycle
        es.emplace_back(n + i, n + (i + r) % n);     // hub jumps
        es.emplace_back(n + i, i);                   // spoke
        es.emplace_back(n + i, (i + a) % n);         // shifted spoke
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Graph g(2 * n, std::move(es));
    if (g.edge_count() != 4 * n)
        throw degenerate_parameters("parameters do not produce a simple tetravalent graph");
    return g;
}

namespace {

Graph make_tetracirculant16() {
    // u_i = i, v_i = 4+i, w_i = 8+i, z_i = 12+i  (i in Z4)
    auto u = [](int i) { return i & 3; };
    auto v = [](int i) { return 4 + (i & 3); };
    auto w = [](int i) { return 8 + (i & 3); };
    auto z = [](int i) { return 12 + (i & 3); };
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i) {
        es.emplace_back(u(i), v(i));
        es.emplace_back(v(i), w(i));
        es.emplace_back(u(i), z(i));
        es.emplace_back(u(i), u(i + 1));
        es.emplace_back(v(i), v(i + 1));
        es.emplace_back(z(i), w(i + 1));
        es.emplace_back(z(i), w(i + 2));
        es.emplace_back(z(i), w(i + 3));
    }
    return Graph(16, std::move(es));
}

Graph make_ncvt30() {
    // u_i = i, v_i = 15+i  (i in Z15)
    auto u = [](int i) { return ((i % 15) + 15) % 15; };
    auto v = [](int i) { return 15 + ((i % 15) + 15) % 15; };
    std::vector<Edge> es;
    for (int i = 0; i < 15; ++i) {
        es.emplace_back(u(i), v(i));
        es.emplace_back(u(i), v(i + 5));
        es.emplace_back(v(i), v(i + 3));
        es.emplace_back(u(i), u(i + 6));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(30, std::move(es));
}

Graph make_grr12() {
    // three 4-cliques u_i = i, v_i = 4+i, w_i = 8+i plus 18 cross edges
    auto u = [](int i) { return i; };
    auto v = [](int i) { return 4 + i; };
    auto w = [](int i) { return 8 + i; };
    std::vector<Edge> es;
    for (int base : {0, 4, 8})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
    const std::vector<std::pair<int, int>> cross = {
        {v(0), u(2)}, {v(1), u(3)}, {v(2), u(0)}, {v(2), u(2)}, {v(3), u(1)}, {v(3), u(3)},
        {u(3), w(2)}, {u(2), w(3)}, {u(1), w(0)}, {u(1), w(2)}, {u(0), w(1)}, {u(0), w(3)},
        {v(3), w(1)}, {v(2), w(0)}, {v(1), w(3)}, {v(1), w(1)}, {v(0), w(2)}, {v(0), w(0)}};
    for (auto [a, b] : cross) es.emplace_back(a, b);
    return Graph(12, std::move(es));
}

Graph make_phi5_d3() {
    const std::vector<std::pair<int, int>> pairs = {{0, 3}, {0, 5}, {0, 6}, {1, 4}, {1, 5},
                                                    {1, 7}, {2, 4}, {2, 6}, {2, 7}, {3, 6},
                                                    {3, 7}, {4, 5}, {4, 6}, {4, 7}, {6, 7}};
    std::vector<Edge> es;
    for (auto [a, b] : pairs) es.emplace_back(a, b);
    return Graph(8, std::move(es));
}

} // namespace

Graph sporadic(const std::string& name) {
    if (name == "tetracirculant16") return make_tetracirculant16();
    if (name == "ncvt30") return make_ncvt30();
    if (name == "grr12") return make_grr12();
    if (name == "phi5_d3") return make_phi5_d3();
    throw unknown_name("unknown sporadic graph: " + name);
}

std::vector<std::string> sporadic_names() {
    return {"tetracirculant16", "ncvt30", "grr12", "phi5_d3"};
}

namespace {

long long need_param(const FamilySpec& s, std::size_t i) {
    if (i >= s.params.size())
        throw parameter_too_small("missing parameter for family " + s.family);
    return s.params[i];
}

} // namespace

Graph make_family(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "complete") return complete(static_cast<int>(need_param(spec, 0)));
    if (f == "cycle") return cycle(static_cast<int>(need_param(spec, 0)));
    if (f == "path") return path(static_cast<int>(need_param(spec, 0)));
    if (f == "hypercube") return hypercube(static_cast<int>(need_param(spec, 0)));
    if (f == "complete-bipartite")
        return complete_bipartite(static_cast<int>(need_param(spec, 0)));
    if (f == "circulant") {
        const int n = static_cast<int>(need_param(spec, 0));
        if (spec.params.size() < 2)
            throw invalid_connection_set("circulant needs a connection set");
        std::set<int> s;
        for (std::size_t i = 1; i < spec.params.size(); ++i)
            s.insert(static_cast<int>(spec.params[i]));
        return circulant(n, s);
    }
    if (f == "antiprism") return antiprism(static_cast<int>(need_param(spec, 0)));
    if (f == "c3-cart-cycle") return c3_cart_cycle(static_cast<int>(need_param(spec, 0)));
    if (f == "c3-twist-cycle") return c3_twist_cycle(static_cast<int>(need_param(spec, 0)));
    if (f == "triangle-cycle") return triangle_cycle(static_cast<int>(need_param(spec, 0)));
    if (f == "rose-window")
        return rose_window(static_cast<int>(need_param(spec, 0)),
                           static_cast<int>(need_param(spec, 1)),
                           static_cast<int>(need_param(spec, 2)));
    if (f == "sporadic") return sporadic(spec.name);
    throw unknown_name("unknown family: " + f);
}

std::vector<std::string> family_names() {
    return {"complete",  "cycle",         "path",           "hypercube",
            "complete-bipartite", "circulant", "antiprism",  "c3-cart-cycle",
            "c3-twist-cycle",     "triangle-cycle", "rose-window", "sporadic"};
}

} // namespace nutkit
