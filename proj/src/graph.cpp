#include "nutkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace nutkit {

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, std::vector<Edge> edges) {
    if (order < 0) throw invalid_graph("negative order");
    n_ = order;
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    deg_.assign(static_cast<std::size_t>(n_), 0);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.v >= n_) throw invalid_graph("edge endpoint beyond graph order");
        if (i > 0 && edges[i - 1] == e) throw invalid_graph("duplicate edge");
        bits_[static_cast<std::size_t>(e.u) * words_ + static_cast<std::size_t>(e.v >> 6)] |=
            std::uint64_t{1} << (e.v & 63);
        bits_[static_cast<std::size_t>(e.v) * words_ + static_cast<std::size_t>(e.u >> 6)] |=
            std::uint64_t{1} << (e.u & 63);
        ++deg_[static_cast<std::size_t>(e.u)];
        ++deg_[static_cast<std::size_t>(e.v)];
    }
    edges_ = std::move(edges);
}

std::vector<int> Graph::neighbours(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(deg_[static_cast<std::size_t>(v)]));
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(static_cast<int>(w) * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(deg_.begin(), deg_.end());
}

int Graph::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(deg_.begin(), deg_.end());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbours(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

bool Graph::is_bipartite() const {
    std::vector<int> colour(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
        if (colour[static_cast<std::size_t>(s)] != -1) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : neighbours(v)) {
                if (colour[static_cast<std::size_t>(u)] == -1) {
                    colour[static_cast<std::size_t>(u)] = colour[static_cast<std::size_t>(v)] ^ 1;
                    q.push(u);
                } else if (colour[static_cast<std::size_t>(u)] ==
                           colour[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::is_regular(int* d) const {
    int mn = min_degree();
    if (mn != max_degree()) return false;
    if (d) *d = mn;
    return true;
}

bool Graph::is_bridge(const Edge& e) const {
    if (!has_edge(e)) throw edge_not_present("edge not in graph");
    // e is a bridge iff v is unreachable from u without crossing e
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{e.u};
    seen[static_cast<std::size_t>(e.u)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbours(v)) {
            if (v == e.u && u == e.v) continue;
            if (v == e.v && u == e.u) continue;
            if (!seen[static_cast<std::size_t>(u)]) {
                if (u == e.v) return false;
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    return true;
}

Graph Graph::relabelled(const Permutation& p) const {
    if (p.degree() != n_) throw index_out_of_range("permutation degree mismatch");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) es.emplace_back(p(e.u), p(e.v));
    return Graph(n_, std::move(es));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw invalid_graph("product of an empty graph");
    if (static_cast<long long>(g.order()) * h.order() > 1000000)
        throw invalid_graph("product order overflow");
    const int hn = h.order();
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(g.edge_count()) * static_cast<std::size_t>(hn) +
               static_cast<std::size_t>(h.edge_count()) * static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges())
        for (int x = 0; x < hn; ++x) es.emplace_back(e.u * hn + x, e.v * hn + x);
    for (int a = 0; a < g.order(); ++a)
        for (const Edge& e : h.edges()) es.emplace_back(a * hn + e.u, a * hn + e.v);
    return Graph(g.order() * hn, std::move(es));
}

Graph fuse_at(const Graph& g, int v, const Graph& h, int w) {
    if (v < 0 || v >= g.order()) throw index_out_of_range("fuse vertex not in first graph");
    if (w < 0 || w >= h.order()) throw index_out_of_range("fuse vertex not in second graph");
    auto map_h = [&](int z) { return z == w ? v : g.order() + (z < w ? z : z - 1); };
    std::vector<Edge> es(g.edges());
    for (const Edge& e : h.edges()) es.emplace_back(map_h(e.u), map_h(e.v));
    return Graph(g.order() + h.order() - 1, std::move(es));
}

Graph subdivide_edge(const Graph& g, const Edge& e, int k) {
    if (!g.has_edge(e)) throw edge_not_present("edge not in graph");
    if (k < 1) throw invalid_graph("subdivision needs at least one new vertex");
    std::vector<Edge> es;
    es.reserve(g.edges().size() + static_cast<std::size_t>(k));
    for (const Edge& f : g.edges())
        if (!(f == e)) es.push_back(f);
    int first = g.order();
    es.emplace_back(e.u, first);
    for (int i = 1; i < k; ++i) es.emplace_back(first + i - 1, first + i);
    es.emplace_back(first + k - 1, e.v);
    return Graph(g.order() + k, std::move(es));
}

} // namespace nutkit
