#include "nutkit/verify.hpp"

#include <algorithm>
#include <map>

#include "nutkit/aut.hpp"
#include "nutkit/enumerate.hpp"
#include "nutkit/families.hpp"
#include "nutkit/graph6.hpp"
#include "nutkit/kernel.hpp"

namespace nutkit {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    case CheckStatus::premise_not_met: return "premise-not-met";
    case CheckStatus::formula_only: return "formula-only";
    }
    return "?";
}

json VerificationReport::to_json() const {
    return json{{"claim", claim},
                {"instance", instance},
                {"status", to_string(status)},
                {"witness", witness}};
}

namespace {

std::string describe(const Graph& g) { return "graph6=" + write_graph6(g); }

json omega_json(const OrbitSignature& s) {
    return json{{"ov", s.ov}, {"oe", s.oe}, {"aut_order", s.aut_order.str()}};
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int int_pow(Int b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

VerificationReport check_orbit_inequality(const Graph& g) {
    VerificationReport rep;
    rep.claim = "orbit-inequality";
    rep.instance = describe(g);
    auto kx = nut_kernel(g);
    if (!kx) {
        rep.status = CheckStatus::not_applicable;
        rep.witness = json{{"reason", "not a nut graph"}};
        return rep;
    }
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    rep.status = (sig.oe >= sig.ov + 1) ? CheckStatus::pass : CheckStatus::fail;
    rep.witness = json{{"omega", omega_json(sig)}};

    // edge-type refinement: per edge orbit, its type and like/unlike class
    const EdgeSignatureTable table = edge_signatures(g, *kx);
    std::map<Edge, EdgeKind> kind_of;
    for (const EdgeSignature& row : table.rows) kind_of.emplace(row.e, row.kind);
    json types = json::array();
    for (const auto& cls : p.edge_orbits) {
        const Edge& e = cls.front();
        const int oi = p.vertex_orbit_of[static_cast<std::size_t>(e.u)];
        const int oj = p.vertex_orbit_of[static_cast<std::size_t>(e.v)];
        int like = 0, unlike = 0;
        for (const Edge& f : cls)
            (kind_of.at(f) == EdgeKind::like ? like : unlike)++;
        types.push_back(json{{"size", cls.size()},
                             {"type", oi == oj ? "intra" : "inter"},
                             {"orbits", json::array({std::min(oi, oj), std::max(oi, oj)})},
                             {"like", like},
                             {"unlike", unlike}});
    }
    rep.witness["edge_orbit_types"] = std::move(types);
    return rep;
}

VerificationReport check_vt_nut_conditions(const Graph& g) {
    VerificationReport rep;
    rep.claim = "vt-nut-conditions";
    rep.instance = describe(g);
    auto kx = nut_kernel(g);
    if (!kx) throw not_nut_graph("vertex-transitive nut conditions require a nut graph");
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    (void)p;
    if (sig.ov != 1) throw not_vertex_transitive("graph is not vertex-transitive");

    const int n = g.order();
    int d = 0;
    g.is_regular(&d); // vertex-transitive, so regular
    const bool congruences = (d % 4 == 0 && n % 2 == 0 && n >= d + 4) ||
                             (d % 4 == 2 && n % 4 == 0 && n >= d + 6);
    bool entries_pm1 = true;
    int plus = 0, minus = 0;
    for (const Int& x : *kx) {
        if (x == 1) ++plus;
        else if (x == -1) ++minus;
        else entries_pm1 = false;
    }
    const bool balanced = entries_pm1 && plus == minus;
    rep.status = (congruences && entries_pm1 && balanced && n % 2 == 0 && d % 2 == 0)
                     ? CheckStatus::pass
                     : CheckStatus::fail;
    rep.witness = json{{"order", n},
                       {"degree", d},
                       {"congruences", congruences},
                       {"kernel_entries_pm1", entries_pm1},
                       {"plus", plus},
                       {"minus", minus}};
    return rep;
}

VerificationReport check_orbit_sums(const Graph& g) {
    VerificationReport rep;
    rep.claim = "orbit-sums";
    rep.instance = describe(g);
    auto kx = nut_kernel(g);
    if (!kx) throw not_nut_graph("orbit sums are checked on nut graphs");
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    const VertexOrbitGraph q = vertex_orbit_graph(g, p);

    bool all_independent = true;
    for (int i = 0; i < q.k; ++i)
        if (q.intra[static_cast<std::size_t>(i)]) all_independent = false;
    bool leaf_premise = false;
    for (int i = 0; i < q.k; ++i)
        if (!q.intra[static_cast<std::size_t>(i)] && q.k >= 2 && q.is_leaf(i)) leaf_premise = true;
    const bool cycle_premise = all_independent && q.is_cycle() && q.k % 2 == 1;

    rep.witness = json{{"omega", omega_json(sig)},
                       {"leaf_premise", leaf_premise},
                       {"odd_cycle_premise", cycle_premise}};

    if (leaf_premise || cycle_premise) {
        bool ok = true;
        json orbit_data = json::array();
        for (const auto& orbit : p.vertex_orbits) {
            Int sum = 0;
            int plus = 0, minus = 0;
            for (int v : orbit) {
                const Int& x = (*kx)[static_cast<std::size_t>(v)];
                sum += x;
                (x > 0 ? plus : minus)++;
            }
            const bool zero = sum.is_zero();
            const bool bal = plus == minus;
            const bool even = orbit.size() % 2 == 0;
            ok = ok && zero && bal && even;
            orbit_data.push_back(json{{"size", orbit.size()},
                                      {"sum", sum.str()},
                                      {"plus", plus},
                                      {"minus", minus}});
        }
        rep.witness["orbits"] = std::move(orbit_data);
        rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
        return rep;
    }

    rep.status = CheckStatus::premise_not_met;
    if (g.order() % 2 == 1) {
        // kernel entries are constant in absolute value and in sign within
        // each orbit of an odd-order nut graph
        bool constant = true;
        for (const auto& orbit : p.vertex_orbits) {
            const Int& first = (*kx)[static_cast<std::size_t>(orbit.front())];
            for (int v : orbit)
                if ((*kx)[static_cast<std::size_t>(v)] != first) constant = false;
        }
        rep.witness["odd_order_orbit_constancy"] = constant;
        if (!constant) rep.status = CheckStatus::fail;
    }
    return rep;
}

VerificationReport check_multiplier_symmetry(const Graph& g, int k) {
    VerificationReport rep;
    rep.claim = "multiplier-symmetry";
    const Graph mk = multiplier(g, k); // propagates precondition errors
    rep.instance = describe(g) + " k=" + std::to_string(k);

    int d = 0;
    g.is_regular(&d);
    const int t = d / 2;
    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    (void)p;

    const int half = (k + 1) / 2;
    const int ov_formula = half * sig.ov;
    const int oe_formula = sig.oe + half * sig.ov;
    const Int order_formula =
        int_pow(int_pow(2, t) * factorial(t), g.order()) * sig.aut_order;

    rep.witness = json{{"base_omega", omega_json(sig)},
                       {"formula",
                        json{{"ov", ov_formula},
                             {"oe", oe_formula},
                             {"aut_order", order_formula.str()}}},
                       {"nut_guaranteed", multiplier_nut_guaranteed(g, k)},
                       {"multiplier_order", mk.order()}};

    if (mk.order() > 200) {
        rep.status = CheckStatus::formula_only;
        rep.witness["direct"] = nullptr;
        return rep;
    }
    const AutGroup ma = automorphism_group(mk);
    auto [mp, msig] = orbits(mk, ma);
    (void)mp;
    rep.witness["direct"] = omega_json(msig);
    rep.status = (msig.ov == ov_formula && msig.oe == oe_formula &&
                  msig.aut_order == order_formula)
                     ? CheckStatus::pass
                     : CheckStatus::fail;
    return rep;
}

std::vector<VerificationReport> check_circulant_dihedral(int k, int n_from, int n_to) {
    if (k < 1) throw parameter_too_small("connection bound must be at least 1");
    std::vector<VerificationReport> out;
    for (int n = n_from; n <= n_to; ++n) {
        VerificationReport rep;
        rep.claim = "circulant-dihedral";
        rep.instance = "Circ(" + std::to_string(n) + ",{1.." + std::to_string(k) + "})";
        if (n < 2 * k + 1) {
            rep.status = CheckStatus::not_applicable;
            rep.witness = json{{"reason", "connection set needs n >= 2k+1"}};
            out.push_back(std::move(rep));
            continue;
        }
        std::set<int> conn;
        for (int s = 1; s <= k; ++s) conn.insert(s);
        const Graph g = circulant(n, conn);
        const AutGroup a = automorphism_group(g);
        auto [p, sig] = orbits(g, a);
        (void)p;
        Int expect;
        std::string regime;
        if (n == 2 * k + 1) {
            expect = factorial(n); // complete graph
            regime = "complete";
        } else if (n == 2 * k + 2) {
            expect = int_pow(2, k + 1) * factorial(k + 1); // cocktail party graph
            regime = "cocktail-party";
        } else {
            expect = 2 * n;
            regime = "dihedral";
        }
        const bool order_ok = sig.aut_order == expect;
        const bool vt_ok = sig.ov == 1;
        rep.status = (order_ok && vt_ok) ? CheckStatus::pass : CheckStatus::fail;
        rep.witness = json{{"n", n},
                           {"k", k},
                           {"regime", regime},
                           {"expected_order", expect.str()},
                           {"aut_order", sig.aut_order.str()},
                           {"vertex_transitive", vt_ok}};
        out.push_back(std::move(rep));
    }
    return out;
}

std::pair<ConstructionDelta, VerificationReport>
check_construction_delta(const Graph& g, ConstructionKind which, int a, int b) {
    ConstructionDelta delta;
    VerificationReport rep;
    rep.claim = "construction-delta";

    const AutGroup ag = automorphism_group(g);
    auto [p, before] = orbits(g, ag);
    delta.before = before;

    if (which == ConstructionKind::fowler) {
        if (a < 0 || a >= g.order()) throw index_out_of_range("target vertex out of range");
        rep.instance = describe(g) + " fowler v=" + std::to_string(a);
        const auto& orbit = p.vertex_orbits[static_cast<std::size_t>(
            p.vertex_orbit_of[static_cast<std::size_t>(a)])];
        const FowlerResult fr = fowler_with_layout(g, orbit);
        delta.result = fr.graph;

        auto [t, classes] = stabilizer_orbit_counts(g, orbit.front(), ag);
        (void)classes;
        delta.t = t;

        const AutGroup fa = automorphism_group(fr.graph);
        auto [fp, after] = orbits(fr.graph, fa);
        (void)fp;
        delta.after = after;
        delta.phi = after.oe - before.oe;
        delta.group_preserved = after.aut_order == before.aut_order;

        // tau: orbits of the stabilizer of the representative vertex on the
        // ordered gadget pairs (w_i, x_j), i != j. Any automorphism fixing v
        // maps the gadget to itself: the w's are exactly N(v), and only v and
        // the gadget's x's meet them.
        const FowlerGadget& gad = fr.gadgets.front();
        const int d = static_cast<int>(gad.u.size());
        std::map<int, int> widx, xidx;
        for (int i = 0; i < d; ++i) widx[gad.w[static_cast<std::size_t>(i)]] = i;
        for (int i = 0; i < d; ++i) xidx[gad.x[static_cast<std::size_t>(i)]] = i;
        const std::vector<Permutation> stab = stabilizer_generators(fa, gad.v);
        std::vector<int> parent(static_cast<std::size_t>(d * d));
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const Permutation& s : stab)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    if (i == j) continue;
                    const int iw = widx.at(s(gad.w[static_cast<std::size_t>(i)]));
                    const int jx = xidx.at(s(gad.x[static_cast<std::size_t>(j)]));
                    const int from = find(i * d + j), to = find(iw * d + jx);
                    if (from != to) parent[static_cast<std::size_t>(from)] = to;
                }
        std::set<int> roots;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) roots.insert(find(i * d + j));
        delta.tau = static_cast<int>(roots.size());

        bool ok = true;
        json checks = json::object();
        if (delta.group_preserved) {
            const bool ov_ok = after.ov == before.ov + 2 * delta.t;
            const bool oe_ok = after.oe == before.oe + delta.t + delta.tau;
            const bool lower = delta.phi >= 4 && (g.degree(a) < 3 || delta.phi >= 5);
            const bool upper = delta.phi <= g.degree(a) * g.degree(a);
            ok = ov_ok && oe_ok && lower && upper;
            checks = json{{"ov_delta", ov_ok}, {"oe_delta", oe_ok},
                          {"phi_lower", lower}, {"phi_upper", upper}};
        }
        rep.status = ok ? (delta.group_preserved ? CheckStatus::pass
                                                 : CheckStatus::premise_not_met)
                        : CheckStatus::fail;
        rep.witness = json{{"before", omega_json(before)},
                           {"after", omega_json(after)},
                           {"t", delta.t},
                           {"tau", delta.tau},
                           {"phi", delta.phi},
                           {"group_preserved", delta.group_preserved},
                           {"checks", checks},
                           {"result_is_nut", is_nut(delta.result)}};
        return {std::move(delta), std::move(rep)};
    }

    const Edge rep_edge(a, b);
    int ei = -1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges()[static_cast<std::size_t>(i)] == rep_edge) ei = i;
    if (ei == -1) throw edge_not_present("target edge not in graph");
    const auto& orbit =
        p.edge_orbits[static_cast<std::size_t>(p.edge_orbit_of[static_cast<std::size_t>(ei)])];

    const bool is_bridge_kind = which == ConstructionKind::bridge;
    rep.instance = describe(g) + (is_bridge_kind ? " bridge " : " subdivision ") +
                   std::to_string(a) + "-" + std::to_string(b);
    delta.result = is_bridge_kind ? bridge_construction(g, orbit)
                                  : subdivision_construction(g, orbit);
    delta.swap_endpoints = has_swap_automorphism(ag, rep_edge.u, rep_edge.v);

    const AutGroup fa = automorphism_group(delta.result);
    auto [fp, after] = orbits(delta.result, fa);
    (void)fp;
    delta.after = after;
    delta.phi = after.oe - before.oe;
    delta.group_preserved = after.aut_order == before.aut_order;

    bool ok = true;
    json checks = json::object();
    if (delta.group_preserved) {
        const int step = (is_bridge_kind ? 1 : 2) * (delta.swap_endpoints ? 1 : 2);
        const bool ov_ok = after.ov == before.ov + step;
        const bool oe_ok = after.oe == before.oe + step;
        ok = ov_ok && oe_ok;
        checks = json{{"expected_delta", step}, {"ov_delta", ov_ok}, {"oe_delta", oe_ok}};
    }
    rep.status = ok ? (delta.group_preserved ? CheckStatus::pass : CheckStatus::premise_not_met)
                    : CheckStatus::fail;
    rep.witness = json{{"before", omega_json(before)},
                       {"after", omega_json(after)},
                       {"swap_endpoints", delta.swap_endpoints},
                       {"orbit_size", orbit.size()},
                       {"group_preserved", delta.group_preserved},
                       {"checks", checks},
                       {"result_is_nut", is_nut(delta.result)}};
    return {std::move(delta), std::move(rep)};
}

VerificationReport check_two_orbit_prime_exclusion(int n_max) {
    if (n_max > 8) throw order_too_large("enumeration is capped at order 8");
    VerificationReport rep;
    rep.claim = "two-orbit-prime-exclusion";
    rep.instance = "all nut graphs of prime order <= " + std::to_string(n_max);
    bool ok = true;
    json data = json::array();
    for (int n = 2; n <= n_max; ++n) {
        bool prime = n >= 2;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        int nuts = 0, two_orbit = 0;
        for (const NutRecord& r : enumerate_nut(n)) {
            ++nuts;
            if (r.omega.ov == 2) {
                ++two_orbit;
                ok = false;
            }
        }
        data.push_back(json{{"n", n}, {"nut_count", nuts}, {"two_orbit_count", two_orbit}});
    }
    rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
    rep.witness = json{{"per_order", std::move(data)}};
    return rep;
}

} // namespace nutkit
