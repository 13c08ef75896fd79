#include "nutkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nutkit/aut.hpp"
#include "nutkit/constructions.hpp"
#include "nutkit/enumerate.hpp"
#include "nutkit/families.hpp"
#include "nutkit/graph6.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/orbits.hpp"
#include "nutkit/verify.hpp"

namespace nutkit::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "nutkit.analysis/1";

int default_jobs() {
    if (const char* env = std::getenv("NUTKIT_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

json analysis_record(const Graph& g) {
    json rec;
    rec["schema"] = kSchema;
    rec["graph6"] = write_graph6(g);
    rec["order"] = g.order();
    rec["edges"] = g.edge_count();
    const int n = g.order();
    rec["degree"] = json{{"min", g.min_degree()},
                         {"max", g.max_degree()},
                         {"avg", n == 0 ? 0.0 : 2.0 * g.edge_count() / n}};
    rec["connected"] = g.is_connected();
    rec["bipartite"] = g.is_bipartite();

    const NullityReport nr = nullity(g);
    rec["eta"] = nr.eta;
    bool nut = false;
    if (n > 1 && nr.eta == 1) {
        nut = true;
        for (const Int& x : nr.basis.front())
            if (x.is_zero()) nut = false;
    }
    rec["is_nut"] = nut;
    rec["is_core"] = is_core(g);
    if (nr.eta == 1) {
        json kv = json::array();
        for (const Int& x : nr.basis.front()) kv.push_back(x.str());
        rec["kernel"] = std::move(kv);
    }

    const AutGroup a = automorphism_group(g);
    auto [p, sig] = orbits(g, a);
    rec["omega"] = json{{"ov", sig.ov}, {"oe", sig.oe}, {"aut_order", sig.aut_order.str()}};

    json eorb = json::array();
    std::optional<EdgeSignatureTable> table;
    if (nut) table = edge_signatures(g, nr.basis.front());
    for (const auto& cls : p.edge_orbits) {
        const Edge& e = cls.front();
        const int oi = p.vertex_orbit_of[static_cast<std::size_t>(e.u)];
        const int oj = p.vertex_orbit_of[static_cast<std::size_t>(e.v)];
        json row{{"size", cls.size()},
                 {"type", oi == oj ? "intra" : "inter"},
                 {"rep", json::array({e.u, e.v})}};
        if (table) {
            int like = 0, unlike = 0;
            for (const Edge& f : cls) {
                for (const EdgeSignature& s : table->rows)
                    if (s.e == f) {
                        (s.kind == EdgeKind::like ? like : unlike)++;
                        break;
                    }
            }
            row["like"] = like;
            row["unlike"] = unlike;
        }
        eorb.push_back(std::move(row));
    }
    rec["edge_orbits"] = std::move(eorb);
    return rec;
}

std::string pretty_line(const json& rec) {
    std::ostringstream os;
    os << std::left << std::setw(20) << rec["graph6"].get<std::string>() << " n="
       << std::setw(4) << rec["order"].get<int>() << " m=" << std::setw(4)
       << rec["edges"].get<int>() << " eta=" << std::setw(3) << rec["eta"].get<int>()
       << " nut=" << (rec["is_nut"].get<bool>() ? "y" : "n")
       << " core=" << (rec["is_core"].get<bool>() ? "y" : "n") << " omega=("
       << rec["omega"]["ov"].get<int>() << "," << rec["omega"]["oe"].get<int>() << ","
       << rec["omega"]["aut_order"].get<std::string>() << ")";
    return os.str();
}

/// Line-by-line driver: applies fn to every input line, keeping output in
/// input order. With jobs > 1 lines are processed in bounded batches so
/// memory stays constant in the input length.
int for_each_line(std::istream& in, std::ostream& out, std::ostream& err, int jobs,
                  bool lenient,
                  const std::function<std::string(const std::string&)>& fn) {
    long line_no = 0;
    bool failed = false;
    const std::size_t batch_size = static_cast<std::size_t>(jobs) * 8;
    std::vector<std::pair<long, std::string>> batch;

    auto flush = [&] {
        if (batch.empty()) return;
        std::vector<std::future<std::string>> futures;
        futures.reserve(batch.size());
        for (const auto& [no, line] : batch) {
            if (jobs > 1)
                futures.push_back(std::async(std::launch::async, fn, line));
            else
                futures.push_back(std::async(std::launch::deferred, fn, line));
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            try {
                const std::string res = futures[i].get();
                if (!res.empty()) out << res << "\n";
            } catch (const std::exception& ex) {
                err << "line " << batch[i].first << ": " << ex.what() << "\n";
                failed = true;
            }
        }
        batch.clear();
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        batch.emplace_back(line_no, line);
        if (batch.size() >= batch_size) {
            flush();
            if (failed && !lenient) return 1;
        }
    }
    flush();
    if (failed && !lenient) return 1;
    return 0;
}

std::vector<VerificationReport> run_suite_on_graph(const std::string& suite, const Graph& g,
                                                   int k) {
    if (suite == "orbit-inequality") return {check_orbit_inequality(g)};
    if (suite == "vt-nut") return {check_vt_nut_conditions(g)};
    if (suite == "orbit-sums") return {check_orbit_sums(g)};
    if (suite == "multiplier-symmetry") return {check_multiplier_symmetry(g, k)};
    throw unknown_name("unknown verify suite: " + suite);
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"nut graph construction, detection and symmetry analysis"};
    app.require_subcommand(1);

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "analyze graph6 lines");
    bool an_pretty = false, an_lenient = false;
    int an_jobs = default_jobs();
    std::string an_file;
    analyze->add_flag("--pretty", an_pretty, "human-readable table");
    analyze->add_flag("--lenient", an_lenient, "skip malformed lines");
    analyze->add_option("--jobs", an_jobs, "parallel workers");
    analyze->add_option("file", an_file, "input file (default stdin)");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "emit a named family graph");
    std::vector<std::string> gen_args;
    generate->add_option("family", gen_args, "family name and parameters")->expected(-1);

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "apply a construction");
    std::vector<std::string> con_args;
    bool con_report = false;
    construct->add_option("args", con_args, "construction name and arguments")->expected(-1);
    construct->add_flag("--report", con_report, "emit JSON delta reports instead of graph6");

    // ---- filter ----
    auto* filter = app.add_subcommand("filter", "pass through matching graph6 lines");
    bool f_nut = false, f_core = false, f_vt = false, f_lenient = false;
    int f_jobs = default_jobs();
    filter->add_flag("--nut", f_nut, "keep nut graphs");
    filter->add_flag("--core", f_core, "keep core graphs");
    filter->add_flag("--vt", f_vt, "keep vertex-transitive graphs");
    filter->add_flag("--lenient", f_lenient, "skip malformed lines");
    filter->add_option("--jobs", f_jobs, "parallel workers");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free connected graphs");
    int e_n = 0;
    bool e_nut = false;
    enumerate->add_option("-n", e_n, "number of vertices")->required();
    enumerate->add_flag("--nut", e_nut, "only nut graphs");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a theorem-checking suite");
    std::string v_suite;
    int v_k = 1, v_from = 0, v_to = 0, v_nmax = 8, v_u = -1, v_v = -1;
    std::string v_kind;
    verify->add_option("suite", v_suite, "suite name")->required();
    verify->add_option("-k", v_k, "connection bound / cycle length");
    verify->add_option("--from", v_from, "first order");
    verify->add_option("--to", v_to, "last order");
    verify->add_option("--n-max", v_nmax, "largest enumerated order");
    verify->add_option("-u", v_u, "edge endpoint / target vertex");
    verify->add_option("-v", v_v, "edge endpoint");
    verify->add_option("--kind", v_kind, "construction kind");

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "count graphs by orbit signature");
    std::string s_group;
    bool s_lenient = false;
    stats->add_option("--group-by", s_group, "grouping key (ov,oe)")->required();
    stats->add_flag("--lenient", s_lenient, "skip malformed lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            std::ifstream file;
            if (!an_file.empty()) {
                file.open(an_file);
                if (!file) {
                    err << "cannot open " << an_file << "\n";
                    return 2;
                }
            }
            std::istream& src = an_file.empty() ? in : file;
            return for_each_line(src, out, err, an_jobs, an_lenient,
                                 [an_pretty](const std::string& line) {
                                     const json rec = analysis_record(parse_graph6(line));
                                     return an_pretty ? pretty_line(rec) : rec.dump();
                                 });
        }

        if (generate->parsed()) {
            if (gen_args.empty()) {
                err << "usage: generate <family> <params...>\n";
                return 2;
            }
            FamilySpec spec;
            spec.family = gen_args.front();
            for (std::size_t i = 1; i < gen_args.size(); ++i) {
                if (spec.family == "sporadic" && i == 1)
                    spec.name = gen_args[i];
                else
                    spec.params.push_back(std::stoll(gen_args[i]));
            }
            out << write_graph6(make_family(spec)) << "\n";
            return 0;
        }

        if (construct->parsed()) {
            if (con_args.empty()) {
                err << "usage: construct <which> <args...>\n";
                return 2;
            }
            const std::string which = con_args.front();
            auto arg_at = [&](std::size_t i) -> long long {
                if (i >= con_args.size())
                    throw unknown_name("missing argument for construct " + which);
                return std::stoll(con_args[i]);
            };
            if (which == "two-orbit-nut") {
                out << write_graph6(two_orbit_nut(static_cast<int>(arg_at(1)))) << "\n";
                return 0;
            }
            return for_each_line(in, out, err, 1, false, [&](const std::string& line) {
                const Graph g = parse_graph6(line);
                if (which == "multiplier") {
                    return write_graph6(multiplier(g, static_cast<int>(arg_at(1))));
                }
                if (which == "coalesce") {
                    return write_graph6(
                        coalesce_triangle_pentagon(g, static_cast<int>(arg_at(1))));
                }
                if (which == "bridge" || which == "subdivide" || which == "fowler") {
                    const ConstructionKind kind = which == "bridge"
                                                      ? ConstructionKind::bridge
                                                  : which == "subdivide"
                                                      ? ConstructionKind::subdivision
                                                      : ConstructionKind::fowler;
                    const int a = static_cast<int>(arg_at(1));
                    const int b =
                        kind == ConstructionKind::fowler ? -1 : static_cast<int>(arg_at(2));
                    auto [delta, report] = check_construction_delta(g, kind, a, b);
                    if (con_report) {
                        json j = report.to_json();
                        j["output"] = write_graph6(delta.result);
                        return j.dump();
                    }
                    return write_graph6(delta.result);
                }
                throw unknown_name("unknown construction: " + which);
            });
        }

        if (filter->parsed()) {
            return for_each_line(in, out, err, f_jobs, f_lenient, [&](const std::string& line) {
                const Graph g = parse_graph6(line);
                if (f_nut && !is_nut(g)) return std::string();
                if (f_core && !is_core(g)) return std::string();
                if (f_vt) {
                    const AutGroup a = automorphism_group(g);
                    auto [p, sig] = orbits(g, a);
                    (void)p;
                    if (sig.ov != 1) return std::string();
                }
                return write_graph6(g);
            });
        }

        if (enumerate->parsed()) {
            if (e_nut) {
                for (const NutRecord& r : enumerate_nut(e_n))
                    out << write_graph6(r.graph) << "\n";
            } else {
                for (const Graph& g : enumerate_connected(e_n)) out << write_graph6(g) << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            static const std::set<std::string> known_suites = {
                "orbit-inequality", "vt-nut",           "orbit-sums",
                "multiplier-symmetry", "circulant-dihedral", "construction-delta",
                "prime-exclusion"};
            if (!known_suites.count(v_suite)) {
                err << "unknown verify suite: " << v_suite << "\n";
                return 2;
            }
            bool any_fail = false;
            auto emit = [&](const VerificationReport& r) {
                out << r.to_json().dump() << "\n";
                if (!r.ok()) any_fail = true;
            };
            if (v_suite == "circulant-dihedral") {
                if (v_from == 0) v_from = 2 * v_k + 1;
                if (v_to == 0) v_to = 20;
                for (const auto& r : check_circulant_dihedral(v_k, v_from, v_to)) emit(r);
            } else if (v_suite == "prime-exclusion") {
                emit(check_two_orbit_prime_exclusion(v_nmax));
            } else if (v_suite == "construction-delta") {
                ConstructionKind kind;
                if (v_kind == "bridge") kind = ConstructionKind::bridge;
                else if (v_kind == "subdivision") kind = ConstructionKind::subdivision;
                else if (v_kind == "fowler") kind = ConstructionKind::fowler;
                else {
                    err << "--kind must be bridge, subdivision or fowler\n";
                    return 2;
                }
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    auto [delta, r] = check_construction_delta(parse_graph6(line), kind, v_u, v_v);
                    emit(r);
                }
            } else {
                std::string line;
                long line_no = 0;
                while (std::getline(in, line)) {
                    ++line_no;
                    if (line.empty()) continue;
                    try {
                        for (const auto& r : run_suite_on_graph(v_suite, parse_graph6(line), v_k))
                            emit(r);
                    } catch (const unknown_name&) {
                        throw;
                    } catch (const std::exception& ex) {
                        err << "line " << line_no << ": " << ex.what() << "\n";
                        return 1;
                    }
                }
            }
            return any_fail ? 1 : 0;
        }

        if (stats->parsed()) {
            if (s_group != "ov,oe") {
                err << "--group-by supports only: ov,oe\n";
                return 2;
            }
            std::map<std::pair<int, int>, long> counts;
            std::string line;
            long line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (line.empty()) continue;
                try {
                    const Graph g = parse_graph6(line);
                    const AutGroup a = automorphism_group(g);
                    auto [p, sig] = orbits(g, a);
                    (void)p;
                    ++counts[{sig.ov, sig.oe}];
                } catch (const graph6_error& ex) {
                    err << "line " << line_no << ": " << ex.what() << "\n";
                    if (!s_lenient) return 1;
                }
            }
            out << "ov,oe,count\n";
            for (const auto& [key, c] : counts)
                out << key.first << "," << key.second << "," << c << "\n";
            return 0;
        }
    } catch (const graph6_error& ex) {
        err << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& ex) {
        err << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << ex.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace nutkit::cli
