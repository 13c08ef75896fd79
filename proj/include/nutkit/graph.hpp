#pragma once

#include <cstdint>
#include <vector>

#include "nutkit/errors.hpp"
#include "nutkit/perm.hpp"

namespace nutkit {

/// Undirected edge with endpoints stored canonically as u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw invalid_graph("self-loop is not a valid edge");
        if (a < 0 || b < 0) throw invalid_graph("negative vertex id");
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Immutable after construction. Adjacency is kept both as bitset rows (for
/// neighbourhood intersections in the refinement engine) and as a sorted edge
/// list (for iteration); the two views are built together and never diverge.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    bool has_edge(const Edge& e) const { return e.v < n_ && adjacent(e.u, e.v); }

    int degree(int v) const {
        check_vertex(v);
        return deg_[static_cast<std::size_t>(v)];
    }

    std::vector<int> neighbours(int v) const;

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int row_words() const { return static_cast<int>(words_); }

    int min_degree() const;
    int max_degree() const;
    bool is_connected() const;
    bool is_bipartite() const;
    /// True when all degrees coincide; the common degree is written to *d.
    bool is_regular(int* d = nullptr) const;
    bool is_bridge(const Edge& e) const;

    /// Relabel vertex v to p(v).
    Graph relabelled(const Permutation& p) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw index_out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
    std::vector<Edge> edges_; // sorted ascending
};

/// Cartesian product; vertex (a, x) gets label a * h.order() + x.
Graph cartesian_product(const Graph& g, const Graph& h);

/// One-point coalescence identifying v in g with w in h. Labels of g are kept;
/// the remaining vertices of h are appended in ascending original order.
Graph fuse_at(const Graph& g, int v, const Graph& h, int w);

/// Replace edge e by a path through k new internal vertices, appended after
/// the existing labels starting from the lower endpoint of e.
Graph subdivide_edge(const Graph& g, const Edge& e, int k);

} // namespace nutkit
