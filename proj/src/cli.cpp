#include "cograph/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cograph/branching.hpp"
#include "cograph/io.hpp"
#include "cograph/modular.hpp"
#include "cograph/solver.hpp"
#include "cograph/witness.hpp"

namespace cograph {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;

Cost parse_k(const std::string& s) {
    if (s == "inf" || s == "INF" || s == "infinity") return INF;
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0) throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("--k expects an integer or 'inf', got '" + s + "'");
    }
}

std::string fmt(double x, int digits = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << x;
    return ss.str();
}

json stats_json(const RunStats& s) {
    return json{{"recursion_nodes", s.recursion_nodes},
                {"recursion_leaves", s.recursion_leaves},
                {"max_depth", s.max_depth},
                {"witnesses_found", s.witnesses_found},
                {"rules_fired", s.rules_fired},
                {"fallbacks_taken", s.fallbacks_taken},
                {"exact_paths", s.exact_paths},
                {"peeled_components", s.peeled_components},
                {"factor_violations", s.factor_violations},
                {"worst_factor", std::round(s.worst_factor * 1e6) / 1e6},
                {"worst_rule", s.worst_rule}};
}

std::string label(const LabeledGraph& g, Vertex v) { return g.labels[static_cast<std::size_t>(v)]; }

std::string joined(const std::map<std::string, std::uint64_t>& m) {
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ";") + k + ":" + std::to_string(v);
    return s;
}

struct SolveOpts {
    std::string graph;
    std::string k = "inf";
    SolverConfig cfg;
    bool json = false;
    bool no_peel = false;
};

int cmd_solve(const SolveOpts& o, std::ostream& out) {
    const LabeledGraph g = read_graph_file(o.graph);
    SolverConfig cfg = o.cfg;
    if (o.no_peel) cfg.enable_peeling = false;
    const Cost k = parse_k(o.k);
    const SolveResult r = solve(g.graph, k, cfg);
    const bool ok = r.outcome.feasible();
    if (o.json) {
        json j;
        j["status"] = ok ? "solved" : "infeasible";
        j["cost"] = ok ? json(r.outcome.cost) : json(nullptr);
        j["deletions"] = json::array();
        if (ok)
            for (auto [a, b] : r.outcome.solution->pairs) j["deletions"].push_back({label(g, a), label(g, b)});
        j["stats"] = stats_json(r.stats);
        out << j.dump(2) << '\n';
    } else {
        out << "status " << (ok ? "solved" : "infeasible") << '\n';
        if (ok) {
            out << "cost " << r.outcome.cost << '\n';
            for (auto [a, b] : r.outcome.solution->pairs) out << "d " << label(g, a) << ' ' << label(g, b) << '\n';
        }
        const RunStats& s = r.stats;
        out << "# nodes " << s.recursion_nodes << " leaves " << s.recursion_leaves << " max_depth " << s.max_depth
            << '\n';
        out << "# fallbacks " << s.fallbacks_taken << " exact_paths " << s.exact_paths << " peeled "
            << s.peeled_components << " factor_violations " << s.factor_violations << '\n';
        if (!s.rules_fired.empty())
            out << "# rules " << joined(s.rules_fired) << '\n'
                << "# worst " << s.worst_rule << ' ' << fmt(s.worst_factor) << '\n';
        if (!s.witnesses_found.empty()) out << "# witnesses " << joined(s.witnesses_found) << '\n';
    }
    return ok ? kOk : kNo;
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
    const LabeledGraph g = read_graph_file(path);
    const auto p = find_p4(g.graph);
    if (as_json) {
        json j{{"cograph", !p.has_value()}};
        if (p) {
            j["p4"] = json::array();
            for (Vertex v : p->path) j["p4"].push_back(label(g, v));
        }
        out << j.dump(2) << '\n';
    } else if (!p) {
        out << "cograph\n";
    } else {
        out << "p4";
        for (Vertex v : p->path) out << ' ' << label(g, v);
        out << '\n';
    }
    return kOk;
}

int cmd_decompose(const std::string& path, bool as_json, std::ostream& out) {
    const LabeledGraph g = read_graph_file(path);
    if (g.graph.empty()) throw InputError("cannot decompose the empty graph");
    const DecompositionResult d = modular_decomposition(g.graph);
    if (as_json) {
        json blocks = json::array();
        for (const auto& b : d.partition.blocks) {
            json jb = json::array();
            for (Vertex v : b) jb.push_back(label(g, v));
            blocks.push_back(jb);
        }
        json edges = json::array();
        for (auto [a, b] : d.quotient.edges()) edges.push_back({a, b});
        json weights = json::array();
        for (Vertex v = 0; v < d.quotient.size(); ++v) weights.push_back(d.quotient.weight(v));
        out << json{{"kind", to_string(d.kind)}, {"blocks", blocks}, {"quotient", {{"weights", weights}, {"edges", edges}}}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "kind " << to_string(d.kind) << '\n';
    for (std::size_t i = 0; i < d.partition.blocks.size(); ++i) {
        out << "block " << i << " weight " << d.quotient.weight(static_cast<Vertex>(i)) << ':';
        for (Vertex v : d.partition.blocks[i]) out << ' ' << label(g, v);
        out << '\n';
    }
    for (auto [a, b] : d.quotient.edges()) out << "quotient-edge " << a << ' ' << b << '\n';
    return kOk;
}

std::vector<BranchTerm> parse_vector(const std::string& s) {
    std::vector<BranchTerm> terms;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw InputError("empty entry in --vector");
        BranchTerm t;
        const auto caret = item.find('^');
        try {
            std::size_t pos = 0;
            t.value = std::stod(item.substr(0, caret), &pos);
            if (pos != item.substr(0, caret).size()) throw InputError("");
            if (caret != std::string::npos) {
                const std::string cnt = item.substr(caret + 1);
                const long long c = std::stoll(cnt, &pos);
                if (pos != cnt.size() || c < 1) throw InputError("");
                t.count = static_cast<std::uint64_t>(c);
            }
        } catch (const std::exception&) {
            throw InputError("bad --vector entry '" + item + "'");
        }
        if (!(t.value > 0)) throw InputError("branching entries must be positive");
        terms.push_back(t);
    }
    if (terms.empty()) throw InputError("--vector is empty");
    return terms;
}

struct FactorOpts {
    std::string vector;
    std::string family;
    double epsilon = 1.0;
    double alpha = 0.5;
    double beta = 0;
    int gamma = 2;
    int d = 0;
};

int cmd_factor(const FactorOpts& o, std::ostream& out) {
    if (!o.vector.empty()) {
        const BranchingVector v(parse_vector(o.vector));
        out << fmt(branching_factor(v)) << '\n';
        return kOk;
    }
    CalibrationFamily fam;
    if (o.family == "two-plus-exp") {
        if (o.d > 0) {
            out << fmt(two_plus_exponential_factor(o.d)) << '\n';
            return kOk;
        }
        fam.kind = CalibrationFamily::Kind::TwoPlusExponential;
    } else if (o.family == "staircase") {
        fam.kind = CalibrationFamily::Kind::Staircase;
        fam.alpha = o.alpha;
        fam.beta = o.beta;
        fam.gamma = o.gamma;
    } else {
        throw InputError("factor needs --vector or --family two-plus-exp|staircase");
    }
    const EpsilonCalibration cal = calibrate_c(o.epsilon, fam);
    out << "c " << cal.chosen_c << '\n' << "factor " << fmt(cal.certified_factor) << '\n';
    return kOk;
}

int cmd_witness(const std::string& path, int c, std::int64_t budget, bool as_json, std::ostream& out) {
    const LabeledGraph g = read_graph_file(path);
    if (c < 3) throw InputError("--c must be at least 3");
    if (g.graph.empty()) throw InputError("empty graph");
    const DecompositionResult d = modular_decomposition(g.graph);
    const bool prime = is_prime(g.graph);
    // search the quotient when the graph itself has non-trivial modules;
    // quotient vertices are reported by their block's first label
    const WeightedGraph& h = prime ? g.graph : d.quotient;
    auto name = [&](Vertex v) { return prime ? label(g, v) : label(g, d.partition.blocks[static_cast<std::size_t>(v)].front()); };
    std::optional<Witness> w;
    if (h.size() >= 3 && is_prime(h)) w = find_witness(h, c, budget);
    if (as_json) {
        json j{{"searched", prime ? "graph" : "quotient"}, {"found", w.has_value()}};
        if (w) {
            j["family"] = to_string(w->family);
            j["c"] = w->c;
            j["embedding"] = json::array();
            for (Vertex v : w->embedding) j["embedding"].push_back(name(v));
            if (w->family == Family::Chain) j["code"] = w->code;
        }
        out << j.dump(2) << '\n';
    } else if (!w) {
        out << "no witness in " << (prime ? "graph" : "quotient") << '\n';
    } else {
        out << "family " << to_string(w->family) << " c " << w->c << (prime ? "" : " (in quotient)") << '\n';
        out << "embedding";
        for (Vertex v : w->embedding) out << ' ' << name(v);
        out << '\n';
        if (w->family == Family::Chain) out << "code " << w->code << '\n';
    }
    return w ? kOk : kNo;
}

int cmd_verify(const std::string& graph, const std::string& solution, std::ostream& out) {
    const LabeledGraph g = read_graph_file(graph);
    const SolutionFile s = read_solution_file(solution);
    const VerifyReport r = verify_solution(g, s);
    if (r.ok)
        out << "ok cost " << r.cost << '\n';
    else
        out << "violation: " << r.message << '\n';
    return r.ok ? kOk : kNo;
}

struct BenchOpts {
    std::string dir;
    std::string gen;
    int n = 12;
    double p = 0.5;
    std::string family = "SubdividedStar";
    int seeds = 5;
    unsigned seed = 1;
    std::string k_max = "inf";
    SolverConfig cfg;
    bool no_time = false;
};

LabeledGraph numbered(WeightedGraph g) {
    LabeledGraph out;
    for (Vertex v = 0; v < g.size(); ++v) out.labels.push_back(std::to_string(v));
    out.graph = std::move(g);
    return out;
}

std::vector<std::pair<std::string, LabeledGraph>> bench_instances(const BenchOpts& o) {
    std::vector<std::pair<std::string, LabeledGraph>> inst;
    if (!o.dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(o.dir))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) inst.emplace_back(f.filename().string(), read_graph_file(f.string()));
        return inst;
    }
    if (o.n < 1) throw InputError("--n must be positive");
    for (int s = 0; s < o.seeds; ++s) {
        std::mt19937_64 rng(o.seed + static_cast<unsigned>(s));
        std::bernoulli_distribution coin(o.p);
        const std::string tag = o.gen + "-" + std::to_string(o.seed + static_cast<unsigned>(s));
        if (o.gen == "gnp") {
            WeightedGraph g(o.n);
            for (Vertex a = 0; a < o.n; ++a)
                for (Vertex b = a + 1; b < o.n; ++b)
                    if (coin(rng)) g.add_edge(a, b);
            inst.emplace_back(tag, numbered(std::move(g)));
        } else if (o.gen == "path") {
            WeightedGraph g(o.n);
            for (Vertex a = 0; a + 1 < o.n; ++a) g.add_edge(a, a + 1);
            inst.emplace_back("path-" + std::to_string(o.n), numbered(std::move(g)));
        } else if (o.gen == "chain") {
            std::string code(static_cast<std::size_t>(o.n), '0');
            for (auto& ch : code) ch = coin(rng) ? '1' : '0';
            inst.emplace_back(tag + "-" + code, numbered(generate_chain(code).graph));
        } else if (o.gen == "family") {
            const auto f = family_from_string(o.family);
            if (!f || *f == Family::Chain) throw InputError("unknown --family '" + o.family + "'");
            // planted pattern plus random extra vertices up to n
            const WeightedGraph base = generate_family(*f, o.cfg.c).graph;
            const int n = std::max(o.n, base.size());
            WeightedGraph g(n);
            for (auto [a, b] : base.edges()) g.add_edge(a, b);
            for (Vertex a = base.size(); a < n; ++a)
                for (Vertex b = 0; b < a; ++b)
                    if (coin(rng)) g.add_edge(a, b);
            inst.emplace_back(tag, numbered(std::move(g)));
        } else {
            throw InputError("bench needs a directory or --gen gnp|family|path|chain");
        }
    }
    return inst;
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
    const Cost k = parse_k(o.k_max);
    out << "instance,n,m,status,cost,nodes,leaves,fallbacks,worst_rule,rules" << (o.no_time ? "" : ",time_ms") << '\n';
    for (const auto& [name, g] : bench_instances(o)) {
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult r = solve(g.graph, k, o.cfg);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out << name << ',' << g.graph.size() << ',' << g.graph.edge_count() << ','
            << (r.outcome.feasible() ? "solved" : "infeasible") << ','
            << (r.outcome.feasible() ? std::to_string(r.outcome.cost) : "") << ',' << r.stats.recursion_nodes << ','
            << r.stats.recursion_leaves << ',' << r.stats.fallbacks_taken << ',' << r.stats.worst_rule << ','
            << joined(r.stats.rules_fired);
        if (!o.no_time) out << ',' << fmt(ms, 3);
        out << '\n';
    }
    return kOk;
}

void solver_flags(CLI::App* sub, SolverConfig& cfg) {
    sub->add_option("--C", cfg.C, "brute-force threshold (vertices)")->capture_default_str();
    sub->add_option("--c", cfg.c, "witness size parameter")->capture_default_str();
    sub->add_option("--epsilon", cfg.epsilon, "factor slack for the 2+eps check")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "witness search node budget")->capture_default_str();
    sub->add_flag("--strict-paper", cfg.strict_paper, "same k on every factor, no incumbent pruning");
    sub->add_flag("--parallel", cfg.parallel, "explore sibling branches on threads");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cograph deletion solver", "cographctl"};
    app.require_subcommand(1);

    SolveOpts so;
    auto* solve_cmd = app.add_subcommand("solve", "minimum-cost edge deletions to a cograph");
    solve_cmd->add_option("graph", so.graph, "graph file")->required();
    solve_cmd->add_option("--k", so.k, "budget: integer or inf")->capture_default_str();
    solver_flags(solve_cmd, so.cfg);
    solve_cmd->add_flag("--json", so.json, "JSON output");
    solve_cmd->add_flag("--no-peel", so.no_peel, "keep path components in the recursion");

    std::string check_path;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "cograph test or a P4");
    check_cmd->add_option("graph", check_path)->required();
    check_cmd->add_flag("--json", check_json);

    std::string dec_path;
    bool dec_json = false;
    auto* dec_cmd = app.add_subcommand("decompose", "top-level modular partition and quotient");
    dec_cmd->add_option("graph", dec_path)->required();
    dec_cmd->add_flag("--json", dec_json);

    FactorOpts fo;
    auto* factor_cmd = app.add_subcommand("factor", "branching factor of a vector or calibration family");
    factor_cmd->add_option("--vector", fo.vector, "entries like 1,2,2,2 or 1,2^3");
    factor_cmd->add_option("--family", fo.family, "two-plus-exp or staircase");
    factor_cmd->add_option("--epsilon", fo.epsilon)->capture_default_str();
    factor_cmd->add_option("--alpha", fo.alpha)->capture_default_str();
    factor_cmd->add_option("--beta", fo.beta)->capture_default_str();
    factor_cmd->add_option("--gamma", fo.gamma)->capture_default_str();
    factor_cmd->add_option("--d", fo.d, "evaluate two-plus-exp at this exponent");

    std::string wit_path;
    int wit_c = 4;
    std::int64_t wit_budget = 20000;
    bool wit_json = false;
    auto* wit_cmd = app.add_subcommand("witness", "search for an unavoidable subgraph");
    wit_cmd->add_option("graph", wit_path)->required();
    wit_cmd->add_option("--c", wit_c)->capture_default_str();
    wit_cmd->add_option("--budget", wit_budget)->capture_default_str();
    wit_cmd->add_flag("--json", wit_json);

    std::string ver_graph, ver_sol;
    auto* ver_cmd = app.add_subcommand("verify", "check a solution file against a graph");
    ver_cmd->add_option("graph", ver_graph)->required();
    ver_cmd->add_option("solution", ver_sol)->required();

    BenchOpts bo;
    auto* bench_cmd = app.add_subcommand("bench", "CSV benchmark over files or generated instances");
    bench_cmd->add_option("dir", bo.dir, "directory of graph files");
    bench_cmd->add_option("--gen", bo.gen, "gnp, family, path or chain");
    bench_cmd->add_option("--n", bo.n)->capture_default_str();
    bench_cmd->add_option("--p", bo.p)->capture_default_str();
    bench_cmd->add_option("--family", bo.family)->capture_default_str();
    bench_cmd->add_option("--seeds", bo.seeds, "instances per generator")->capture_default_str();
    bench_cmd->add_option("--seed", bo.seed)->capture_default_str();
    bench_cmd->add_option("--k-max", bo.k_max, "budget per instance")->capture_default_str();
    bench_cmd->add_flag("--no-time", bo.no_time, "omit the timing column");
    solver_flags(bench_cmd, bo.cfg);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(so, out);
        if (*check_cmd) return cmd_check(check_path, check_json, out);
        if (*dec_cmd) return cmd_decompose(dec_path, dec_json, out);
        if (*factor_cmd) return cmd_factor(fo, out);
        if (*wit_cmd) return cmd_witness(wit_path, wit_c, wit_budget, wit_json, out);
        if (*ver_cmd) return cmd_verify(ver_graph, ver_sol, out);
        if (*bench_cmd) {
            bo.cfg.validate();
            return cmd_bench(bo, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const RefusalError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace cograph
