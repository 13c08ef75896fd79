#include "nutkit/aut.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace nutkit {

// ---------------------------------------------------------------------------
// StabilizerChain
// ---------------------------------------------------------------------------

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& generators,
                                 std::vector<int> forced_prefix)
    : degree_(degree) {
    for (int b : forced_prefix) {
        base_.push_back(b);
        ensure_level(static_cast<int>(base_.size()) - 1);
        recompute_orbit(static_cast<int>(base_.size()) - 1);
    }
    for (const Permutation& g : generators) add_generator(g);
}

void StabilizerChain::ensure_level(int k) {
    while (static_cast<int>(gens_.size()) <= k) {
        gens_.emplace_back();
        trans_.emplace_back(static_cast<std::size_t>(degree_));
        orbit_.emplace_back();
    }
}

void StabilizerChain::append_base_point(const Permutation& residue) {
    base_.push_back(residue.longest_cycle().second);
    ensure_level(static_cast<int>(base_.size()) - 1);
}

void StabilizerChain::recompute_orbit(int level) {
    auto& tr = trans_[static_cast<std::size_t>(level)];
    auto& orb = orbit_[static_cast<std::size_t>(level)];
    std::fill(tr.begin(), tr.end(), Permutation());
    orb.clear();
    const int b = base_[static_cast<std::size_t>(level)];
    tr[static_cast<std::size_t>(b)] = Permutation::identity(degree_);
    orb.push_back(b);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        const int p = orb[i];
        for (const Permutation& s : gens_[static_cast<std::size_t>(level)]) {
            const int q = s(p);
            if (tr[static_cast<std::size_t>(q)].images().empty()) {
                tr[static_cast<std::size_t>(q)] = s * tr[static_cast<std::size_t>(p)];
                orb.push_back(q);
            }
        }
    }
}

std::pair<int, Permutation> StabilizerChain::strip(Permutation h, int from_level) const {
    for (int l = from_level; l < levels(); ++l) {
        const int p = h(base_[static_cast<std::size_t>(l)]);
        if (!in_level_orbit(l, p)) return {l, std::move(h)};
        h = transversal(l, p).inverse() * h;
    }
    return {levels(), std::move(h)};
}

void StabilizerChain::schreier_sims(int level) {
    recompute_orbit(level);
    // note: ensure_level() in recursive calls may reallocate the outer
    // vectors, so index instead of holding references across iterations
    for (std::size_t oi = 0; oi < orbit_[static_cast<std::size_t>(level)].size(); ++oi) {
        const int beta = orbit_[static_cast<std::size_t>(level)][oi];
        const std::size_t gen_count = gens_[static_cast<std::size_t>(level)].size();
        for (std::size_t si = 0; si < gen_count; ++si) {
            const Permutation s = gens_[static_cast<std::size_t>(level)][si];
            const Permutation sg =
                transversal(level, s(beta)).inverse() * s * transversal(level, beta);
            if (sg.is_identity()) continue;
            auto [j, h] = strip(sg, level + 1);
            if (h.is_identity()) continue;
            if (j == levels()) append_base_point(h);
            for (int l = level + 1; l <= j; ++l)
                gens_[static_cast<std::size_t>(l)].push_back(h);
            for (int l = j; l >= level + 1; --l) schreier_sims(l);
        }
    }
}

bool StabilizerChain::add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw mismatched_group("generator degree mismatch");
    if (g.is_identity()) return false;
    auto [j, h] = strip(g, 0);
    if (h.is_identity()) return false;
    if (j == levels()) append_base_point(h);
    for (int l = 0; l <= j; ++l) gens_[static_cast<std::size_t>(l)].push_back(h);
    for (int l = j; l >= 0; --l) schreier_sims(l);
    return true;
}

Int StabilizerChain::order() const {
    Int o = 1;
    for (const auto& orb : orbit_) o *= static_cast<long>(orb.empty() ? 1 : orb.size());
    return o;
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [j, h] = strip(p, 0);
    (void)j;
    return h.is_identity();
}

// ---------------------------------------------------------------------------
// Equitable partition refinement
// ---------------------------------------------------------------------------

namespace {

struct Partition {
    std::vector<int> vx;       // position -> vertex
    std::vector<int> pos;      // vertex -> position
    std::vector<int> start_of; // position -> start of containing cell
    std::vector<int> len_at;   // cell start -> length (valid at starts only)

    explicit Partition(int n)
        : vx(static_cast<std::size_t>(n)), pos(static_cast<std::size_t>(n)),
          start_of(static_cast<std::size_t>(n), 0), len_at(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i) vx[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
        if (n > 0) len_at[0] = n;
    }

    int size() const { return static_cast<int>(vx.size()); }

    bool discrete() const {
        for (int p = 0; p < size(); ++p)
            if (start_of[static_cast<std::size_t>(p)] != p) return false;
        return true;
    }

    std::vector<int> boundaries() const {
        std::vector<int> b;
        for (int p = 0; p < size(); p += len_at[static_cast<std::size_t>(p)]) b.push_back(p);
        return b;
    }
};

/// Hopcroft-style equitable refinement: split every cell by neighbour counts
/// against splitter cells until the worklist is exhausted.
void refine(const Graph& g, Partition& P, std::deque<int>& queue, std::vector<char>& queued) {
    const int n = g.order();
    const int words = g.row_words();
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(words));
    std::vector<int> cnt(static_cast<std::size_t>(n));

    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(s)] = 0;
        const int slen = P.len_at[static_cast<std::size_t>(s)];

        std::fill(mask.begin(), mask.end(), 0);
        for (int p = s; p < s + slen; ++p) {
            const int v = P.vx[static_cast<std::size_t>(p)];
            mask[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
        for (int v = 0; v < n; ++v) {
            const std::uint64_t* r = g.row(v);
            int c = 0;
            for (int w = 0; w < words; ++w)
                c += std::popcount(r[w] & mask[static_cast<std::size_t>(w)]);
            cnt[static_cast<std::size_t>(v)] = c;
        }

        for (int p = 0; p < n;) {
            const int cs = p;
            const int cl = P.len_at[static_cast<std::size_t>(cs)];
            p += cl;
            if (cl == 1) continue;
            bool uniform = true;
            for (int q = cs + 1; q < cs + cl; ++q)
                if (cnt[static_cast<std::size_t>(P.vx[static_cast<std::size_t>(q)])] !=
                    cnt[static_cast<std::size_t>(P.vx[static_cast<std::size_t>(cs)])]) {
                    uniform = false;
                    break;
                }
            if (uniform) continue;

            std::stable_sort(P.vx.begin() + cs, P.vx.begin() + cs + cl, [&](int a, int b) {
                return cnt[static_cast<std::size_t>(a)] < cnt[static_cast<std::size_t>(b)];
            });
            std::vector<std::pair<int, int>> frags; // (start, len)
            int q = cs;
            while (q < cs + cl) {
                int q2 = q;
                while (q2 < cs + cl &&
                       cnt[static_cast<std::size_t>(P.vx[static_cast<std::size_t>(q2)])] ==
                           cnt[static_cast<std::size_t>(P.vx[static_cast<std::size_t>(q)])])
                    ++q2;
                frags.emplace_back(q, q2 - q);
                q = q2;
            }
            for (const auto& [fs, fl] : frags) {
                P.len_at[static_cast<std::size_t>(fs)] = fl;
                for (int t = fs; t < fs + fl; ++t) {
                    P.start_of[static_cast<std::size_t>(t)] = fs;
                    P.pos[static_cast<std::size_t>(P.vx[static_cast<std::size_t>(t)])] = t;
                }
            }
            if (queued[static_cast<std::size_t>(cs)]) {
                // split cell is pending: all fragments become splitters
                for (const auto& [fs, fl] : frags)
                    if (!queued[static_cast<std::size_t>(fs)]) {
                        queue.push_back(fs);
                        queued[static_cast<std::size_t>(fs)] = 1;
                    }
            } else {
                // enqueue all but the first largest fragment
                int big = 0;
                for (std::size_t fi = 1; fi < frags.size(); ++fi)
                    if (frags[fi].second > frags[static_cast<std::size_t>(big)].second)
                        big = static_cast<int>(fi);
                for (std::size_t fi = 0; fi < frags.size(); ++fi) {
                    if (static_cast<int>(fi) == big) continue;
                    const int fs = frags[fi].first;
                    if (!queued[static_cast<std::size_t>(fs)]) {
                        queue.push_back(fs);
                        queued[static_cast<std::size_t>(fs)] = 1;
                    }
                }
            }
        }
    }
}

void refine_initial(const Graph& g, Partition& P) {
    if (g.order() == 0) return;
    std::deque<int> q{0};
    std::vector<char> queued(static_cast<std::size_t>(g.order()), 0);
    queued[0] = 1;
    refine(g, P, q, queued);
}

void individualize_and_refine(const Graph& g, Partition& P, int v) {
    const int p = P.pos[static_cast<std::size_t>(v)];
    const int cs = P.start_of[static_cast<std::size_t>(p)];
    const int cl = P.len_at[static_cast<std::size_t>(cs)];
    // move v to the front of its cell
    const int other = P.vx[static_cast<std::size_t>(cs)];
    std::swap(P.vx[static_cast<std::size_t>(cs)], P.vx[static_cast<std::size_t>(p)]);
    P.pos[static_cast<std::size_t>(v)] = cs;
    P.pos[static_cast<std::size_t>(other)] = p;
    // split off the singleton
    P.len_at[static_cast<std::size_t>(cs)] = 1;
    if (cl > 1) {
        P.len_at[static_cast<std::size_t>(cs + 1)] = cl - 1;
        for (int t = cs + 1; t < cs + cl; ++t) P.start_of[static_cast<std::size_t>(t)] = cs + 1;
    }
    std::deque<int> q{cs};
    std::vector<char> queued(static_cast<std::size_t>(g.order()), 0);
    queued[static_cast<std::size_t>(cs)] = 1;
    refine(g, P, q, queued);
}

// smallest non-singleton cell, lowest start wins ties; -1 when discrete
int target_cell(const Partition& P) {
    int best = -1, best_len = 0;
    for (int p = 0; p < P.size(); p += P.len_at[static_cast<std::size_t>(p)]) {
        const int l = P.len_at[static_cast<std::size_t>(p)];
        if (l > 1 && (best == -1 || l < best_len)) {
            best = p;
            best_len = l;
        }
    }
    return best;
}

bool is_automorphism(const Graph& g, const Permutation& m) {
    for (const Edge& e : g.edges())
        if (!g.adjacent(m(e.u), m(e.v))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Automorphism search
// ---------------------------------------------------------------------------

class AutSearch {
public:
    explicit AutSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<Permutation> run() {
        if (n_ == 0) return {};
        Partition P(n_);
        refine_initial(g_, P);
        prefix_.clear();
        node(P, 0);
        return gens_;
    }

private:
    enum class R { done, aut, dead };

    R node(const Partition& P, int level) {
        const bool on_first = !have_first_;
        const std::vector<int> sig = P.boundaries();
        if (on_first) {
            traces_.push_back(sig);
        } else {
            if (level >= static_cast<int>(traces_.size()) ||
                sig != traces_[static_cast<std::size_t>(level)])
                return R::dead;
        }

        const int cs = target_cell(P);
        if (cs == -1) return leaf(P, level);

        std::vector<int> cands(P.vx.begin() + cs,
                               P.vx.begin() + cs + P.len_at[static_cast<std::size_t>(cs)]);
        std::sort(cands.begin(), cands.end());

        std::vector<int> processed;
        std::vector<int> uf;
        std::size_t uf_gen_count = static_cast<std::size_t>(-1);
        for (int v : cands) {
            if (!processed.empty()) {
                if (uf_gen_count != gens_.size()) {
                    uf = prefix_stabilizer_orbits();
                    uf_gen_count = gens_.size();
                }
                bool skip = false;
                for (int u : processed)
                    if (uf[static_cast<std::size_t>(u)] == uf[static_cast<std::size_t>(v)]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            Partition child = P;
            individualize_and_refine(g_, child, v);
            prefix_.push_back(v);
            const R r = node(child, level + 1);
            prefix_.pop_back();
            processed.push_back(v);
            if (r == R::aut && !on_first) return R::aut;
        }
        return on_first ? R::done : R::dead;
    }

    R leaf(const Partition& P, int level) {
        if (!have_first_) {
            first_leaf_ = P.vx;
            have_first_ = true;
            first_depth_ = level;
            return R::done;
        }
        if (level != first_depth_) return R::dead;
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p)
            img[static_cast<std::size_t>(first_leaf_[static_cast<std::size_t>(p)])] =
                P.vx[static_cast<std::size_t>(p)];
        Permutation m(std::move(img));
        if (m.is_identity() || !is_automorphism(g_, m)) return R::dead;
        gens_.push_back(std::move(m));
        return R::aut;
    }

    /// Orbit labels of the subgroup generated by the found generators that fix
    /// the current prefix pointwise (an under-approximation of the true
    /// prefix stabilizer, which only weakens pruning, never soundness).
    std::vector<int> prefix_stabilizer_orbits() const {
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
        for (const Permutation& s : gens_) {
            bool fixes = true;
            for (int b : prefix_)
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

    const Graph& g_;
    int n_;
    std::vector<Permutation> gens_;
    std::vector<std::vector<int>> traces_;
    std::vector<int> first_leaf_;
    bool have_first_ = false;
    int first_depth_ = -1;
    std::vector<int> prefix_;
};

} // namespace

AutGroup automorphism_group(const Graph& g) {
    AutGroup a;
    a.degree = g.order();
    a.generators = AutSearch(g).run();
    a.chain = StabilizerChain(g.order(), a.generators);
    return a;
}

bool has_swap_automorphism(const AutGroup& a, int u, int v) {
    if (u < 0 || v < 0 || u >= a.degree || v >= a.degree)
        throw index_out_of_range("vertex id out of range");
    if (u == v) return true;
    StabilizerChain c(a.degree, a.generators, {u, v});
    if (!c.in_level_orbit(0, v)) return false;
    const Permutation t1 = c.transversal(0, v);
    const int q = t1.inverse()(u);
    return c.in_level_orbit(1, q);
}

std::vector<Permutation> stabilizer_generators(const AutGroup& a, int v) {
    if (v < 0 || v >= a.degree) throw index_out_of_range("vertex id out of range");
    StabilizerChain c(a.degree, a.generators, {v});
    return c.levels() > 1 ? c.level_generators(1) : std::vector<Permutation>{};
}

} // namespace nutkit
