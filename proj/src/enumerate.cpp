#include "nutkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nutkit/aut.hpp"
#include "nutkit/graph6.hpp"

namespace nutkit {

namespace {

/// Greedy lexicographic minimization of the graph6 bitstring: positions are
/// assigned one at a time and only candidates whose adjacency column against
/// the assigned prefix is minimal are explored, deduplicated by orbits of the
/// pointwise stabilizer of the assigned set.
class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, const AutGroup& aut) : g_(g), n_(g.order()), aut_(aut) {}

    Permutation run() {
        if (n_ > 64) throw order_too_large("canonical form supports order <= 64");
        assigned_.clear();
        used_.assign(static_cast<std::size_t>(n_), 0);
        have_best_ = false;
        descend();
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p)
            img[static_cast<std::size_t>(best_[static_cast<std::size_t>(p)])] = p;
        return Permutation(std::move(img));
    }

private:
    void descend() {
        const int level = static_cast<int>(assigned_.size());
        if (level == n_) {
            if (!have_best_) {
                best_ = assigned_;
                best_string_ = string_of(assigned_);
                have_best_ = true;
            } else {
                std::string s = string_of(assigned_);
                if (s < best_string_) {
                    best_ = assigned_;
                    best_string_ = std::move(s);
                }
            }
            return;
        }
        // column of adjacency bits against the assigned prefix, packed so the
        // integer order is the lexicographic bit order
        std::uint64_t min_col = ~std::uint64_t{0};
        std::vector<std::pair<std::uint64_t, int>> cols;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < level; ++i)
                if (g_.adjacent(assigned_[static_cast<std::size_t>(i)], v))
                    col |= std::uint64_t{1} << (63 - i);
            cols.emplace_back(col, v);
            min_col = std::min(min_col, col);
        }
        const std::vector<int> orbit_label = stabilizer_orbit_labels();
        std::vector<char> orbit_seen(static_cast<std::size_t>(n_), 0);
        for (const auto& [col, v] : cols) {
            if (col != min_col) continue;
            const int root = orbit_label[static_cast<std::size_t>(v)];
            if (orbit_seen[static_cast<std::size_t>(root)]) continue;
            orbit_seen[static_cast<std::size_t>(root)] = 1;
            assigned_.push_back(v);
            used_[static_cast<std::size_t>(v)] = 1;
            descend();
            used_[static_cast<std::size_t>(v)] = 0;
            assigned_.pop_back();
        }
    }

    std::vector<int> stabilizer_orbit_labels() const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const Permutation& s : aut_.generators) {
            bool fixes = true;
            for (int b : assigned_)
                if (s(b) != b) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v), b = find(s(v));
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) label[static_cast<std::size_t>(v)] = find(v);
        return label;
    }

    std::string string_of(const std::vector<int>& assign) const {
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p)
            img[static_cast<std::size_t>(assign[static_cast<std::size_t>(p)])] = p;
        return write_graph6(g_.relabelled(Permutation(std::move(img))));
    }

    const Graph& g_;
    int n_;
    const AutGroup& aut_;
    std::vector<int> assigned_; // position -> vertex
    std::vector<char> used_;
    std::vector<int> best_;
    std::string best_string_;
    bool have_best_ = false;
};

Permutation canonical_labelling_given(const Graph& g, const AutGroup& aut) {
    return CanonicalSearch(g, aut).run();
}

} // namespace

Permutation canonical_labelling(const Graph& g) {
    return canonical_labelling_given(g, automorphism_group(g));
}

CanonicalForm canonical_form(const Graph& g) {
    return write_graph6(g.relabelled(canonical_labelling(g)));
}

namespace {

/// The designated deletion edge of a graph with at least one edge: the edge
/// mapped to the last 1-bit of the canonical bitstring.
Edge designated_deletion(const Graph& g, const Permutation& canon) {
    const Graph cg = g.relabelled(canon);
    Edge last = cg.edges().front();
    for (const Edge& e : cg.edges()) {
        // graph6 bit order sorts pairs (u, v), u < v, by (v, u)
        if (std::pair(e.v, e.u) > std::pair(last.v, last.u)) last = e;
    }
    const Permutation inv = canon.inverse();
    return Edge(inv(last.u), inv(last.v));
}

void generate(const Graph& g, int n, std::vector<Graph>& out) {
    if (g.is_connected()) out.push_back(g);
    if (g.edge_count() == n * (n - 1) / 2) return;

    const AutGroup a = automorphism_group(g);
    // orbit representatives of non-edges
    std::map<Edge, int> pair_index;
    std::vector<Edge> nonedges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) {
                pair_index.emplace(Edge(u, v), static_cast<int>(nonedges.size()));
                nonedges.emplace_back(u, v);
            }
    std::vector<int> parent(nonedges.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Permutation& s : a.generators)
        for (std::size_t i = 0; i < nonedges.size(); ++i) {
            const Edge img(s(nonedges[i].u), s(nonedges[i].v));
            const int ra = find(static_cast<int>(i));
            const int rb = find(pair_index.at(img));
            if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
        }
    std::vector<char> seen(nonedges.size(), 0);
    for (std::size_t i = 0; i < nonedges.size(); ++i) {
        const int r = find(static_cast<int>(i));
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = 1;
        const Edge e = nonedges[i];

        std::vector<Edge> es(g.edges());
        es.push_back(e);
        Graph child(n, std::move(es));

        // canonical construction path: keep the child only if the added edge
        // is equivalent to the designated deletion edge
        const AutGroup ca = automorphism_group(child);
        const Permutation canon = canonical_labelling_given(child, ca);
        const Edge star = designated_deletion(child, canon);
        auto [cp, csig] = orbits(child, ca);
        (void)csig;
        int ei = -1, si = -1;
        for (int j = 0; j < child.edge_count(); ++j) {
            if (child.edges()[static_cast<std::size_t>(j)] == e) ei = j;
            if (child.edges()[static_cast<std::size_t>(j)] == star) si = j;
        }
        if (cp.edge_orbit_of[static_cast<std::size_t>(ei)] !=
            cp.edge_orbit_of[static_cast<std::size_t>(si)])
            continue;
        generate(child, n, out);
    }
}

} // namespace

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw order_too_large("order must be at least 1");
    if (n > 8) throw order_too_large("enumeration is capped at order 8");
    // the full order-8 run takes seconds; share it within the process
    static std::mutex cache_mutex;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<Graph> raw;
    generate(Graph(n), n, raw);
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(raw.size());
    for (Graph& g : raw) keyed.emplace_back(canonical_form(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [key, g] : keyed) out.push_back(std::move(g));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<NutRecord> enumerate_nut(int n) {
    std::vector<NutRecord> out;
    for (const Graph& g : enumerate_connected(n)) {
        NullityReport r = nullity(g);
        if (r.eta != 1) continue;
        bool full = true;
        for (const Int& x : r.basis.front())
            if (x.is_zero()) {
                full = false;
                break;
            }
        if (!full || g.order() <= 1) continue;
        const AutGroup a = automorphism_group(g);
        auto [p, sig] = orbits(g, a);
        (void)p;
        out.push_back({g, std::move(r), sig});
    }
    return out;
}

} // namespace nutkit
