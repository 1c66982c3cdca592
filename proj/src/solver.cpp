#include "cograph/solver.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "cograph/branching.hpp"
#include "cograph/modular.hpp"
#include "cograph/witness.hpp"

namespace cograph {

void SolverConfig::validate() const {
    if (C < 4) throw InputError("C must be at least 4");
    if (c < 3) throw InputError("c must be at least 3");
    if (!(epsilon > 0)) throw InputError("epsilon must be positive");
    if (budget < 1) throw InputError("budget must be positive");
}

void RunStats::merge(const RunStats& o) {
    recursion_nodes += o.recursion_nodes;
    recursion_leaves += o.recursion_leaves;
    max_depth = std::max(max_depth, o.max_depth);
    for (const auto& [k, v] : o.witnesses_found) witnesses_found[k] += v;
    for (const auto& [k, v] : o.rules_fired) rules_fired[k] += v;
    fallbacks_taken += o.fallbacks_taken;
    exact_paths += o.exact_paths;
    peeled_components += o.peeled_components;
    factor_violations += o.factor_violations;
    if (o.worst_factor > worst_factor || (o.worst_factor == worst_factor && worst_rule.empty())) {
        worst_factor = o.worst_factor;
        worst_rule = o.worst_rule;
    }
}

PeelResult peel_path_components(const WeightedGraph& g) {
    PeelResult out;
    VertexSet keep(static_cast<std::size_t>(g.size()));
    for (const auto& comp : components(g)) {
        const WeightedGraph sub = induced_subgraph(g, std::span<const Vertex>(comp));
        if (!as_path_graph(sub)) {
            for (Vertex v : comp) keep.set(static_cast<std::size_t>(v));
            continue;
        }
        ++out.components;
        const ExactPath p = path_dp(sub);
        out.cost = checked_add(out.cost, p.cost);
        for (auto [a, b] : p.deletions) out.deletions.push_back(make_pair_sorted(comp[a], comp[b]));
    }
    std::sort(out.deletions.begin(), out.deletions.end());
    out.kept = to_vector(keep);
    out.rest = induced_subgraph(g, keep);
    return out;
}

namespace {

// Edge-disjoint induced P4s each need one of their own edges deleted.
Cost p4_packing_bound(const WeightedGraph& g) {
    const int n = g.size();
    std::vector<VertexSet> used(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    auto free_edge = [&](Vertex a, Vertex b) { return !used[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); };
    auto take = [&](Vertex a, Vertex b) {
        used[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
        used[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    };
    Cost lb = 0;
    for (auto [b, c] : g.edges()) {
        for (Vertex mid : {0, 1}) {
            const Vertex x = mid ? c : b, y = mid ? b : c;
            if (!free_edge(x, y)) break;
            VertexSet left = g.neighbors(x) - g.neighbors(y);
            left.reset(static_cast<std::size_t>(y));
            VertexSet right = g.neighbors(y) - g.neighbors(x);
            right.reset(static_cast<std::size_t>(x));
            bool found = false;
            for (auto a = left.find_first(); a != VertexSet::npos && !found; a = left.find_next(a)) {
                const auto va = static_cast<Vertex>(a);
                if (!free_edge(va, x)) continue;
                VertexSet ends = right - g.neighbors(va);
                for (auto d = ends.find_first(); d != VertexSet::npos; d = ends.find_next(d)) {
                    const auto vd = static_cast<Vertex>(d);
                    if (!free_edge(y, vd)) continue;
                    take(va, x);
                    take(x, y);
                    take(y, vd);
                    lb += std::min({g.pair_weight(va, x), g.pair_weight(x, y), g.pair_weight(y, vd)});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return lb;
}

// Feasible solution cost: repeatedly delete the edge lying on the most P4s
// per unit of cost.
Cost greedy_upper_bound(WeightedGraph g) {
    Cost total = 0;
    while (true) {
        std::map<Pair, int> hits;
        for (auto [x, y] : g.edges()) {
            VertexSet left = g.neighbors(x) - g.neighbors(y);
            left.reset(static_cast<std::size_t>(y));
            VertexSet right = g.neighbors(y) - g.neighbors(x);
            right.reset(static_cast<std::size_t>(x));
            for (auto a = left.find_first(); a != VertexSet::npos; a = left.find_next(a)) {
                const VertexSet ends = right - g.neighbors(static_cast<Vertex>(a));
                for (auto d = ends.find_first(); d != VertexSet::npos; d = ends.find_next(d)) {
                    ++hits[make_pair_sorted(static_cast<Vertex>(a), x)];
                    ++hits[make_pair_sorted(x, y)];
                    ++hits[make_pair_sorted(y, static_cast<Vertex>(d))];
                }
            }
        }
        if (hits.empty()) return total;
        Pair best = hits.begin()->first;
        double best_score = -1;
        for (const auto& [e, h] : hits) {
            const double score = h / static_cast<double>(g.pair_weight(e.first, e.second));
            if (score > best_score) {
                best_score = score;
                best = e;
            }
        }
        total = checked_add(total, g.pair_weight(best.first, best.second));
        g.remove_edge(best.first, best.second);
    }
}

Cost total_edge_cost(const WeightedGraph& g) {
    Cost k = 0;
    for (auto [a, b] : g.edges()) k = checked_add(k, g.pair_weight(a, b));
    return k;
}

bool is_fallback(const std::string& prov) { return prov == "p4" || prov == "branch-around"; }

std::optional<RuleSet> relaxed_chain_rule(const WeightedGraph& q, const ChainDescriptor& ch, const SolverConfig& cfg,
                                          RunStats* stats) {
    const std::string& code = ch.vertices.empty() ? std::string() : ch.code;
    const std::size_t n = ch.vertices.size();
    std::vector<RuleSet> cands;
    // easy suffix on a prefix, the pattern not touching code[0]
    for (std::size_t j = 6; j <= n; ++j) {
        for (const char* p : {"0101", "001", "011"}) {
            const std::size_t len = std::char_traits<char>::length(p);
            if (j - len >= 1 && code.compare(j - len, len, p) == 0) {
                cands.push_back(rule_easy_chain(q, chain_slice(ch, 0, j)));
                break;
            }
        }
    }
    // maximal runs of equal types from code[1] on
    std::size_t s = 1;
    while (s < n) {
        std::size_t t = s;
        while (t + 1 < n && code[t + 1] == code[s]) ++t;
        const std::size_t len = t - s + 2;  // with the vertex before the run
        if (len >= 6) {
            const ChainDescriptor slice = chain_slice(ch, s - 1, len);
            if (code[s] == '0') {
                cands.push_back(rule_zero_chain(q, slice));
            } else {
                PathOutcome po = rule_path(q, make_path_context(q, slice.vertices), PathRuleConfig{cfg.c});
                if (auto* r = std::get_if<RuleSet>(&po)) {
                    cands.push_back(std::move(*r));
                } else {
                    if (stats) ++stats->fallbacks_taken;
                    cands.push_back(rule_branch_around(q, make_path_context(q, slice.vertices),
                                                       static_cast<int>(len / 2)));
                }
            }
        }
        s = t + 1;
    }
    if (cands.empty()) return std::nullopt;
    std::size_t best = 0;
    double bf = branching_factor(cands[0].claimed);
    for (std::size_t i = 1; i < cands.size(); ++i) {
        const double f = branching_factor(cands[i].claimed);
        if (f < bf) {
            bf = f;
            best = i;
        }
    }
    return std::move(cands[best]);
}

}  // namespace

Selection select_rule(const WeightedGraph& q, const SolverConfig& cfg, RunStats* stats) {
    if (auto order = as_path_graph(q)) {
        if (stats) ++stats->exact_paths;
        return path_dp_on(q, *order);
    }
    for (Family f : specific_families()) {
        SearchBudget b{cfg.budget};
        if (auto w = find_family(q, f, cfg.c, b)) {
            if (stats) ++stats->witnesses_found[to_string(f)];
            return rule_fixed(q, *w);
        }
    }
    SearchBudget b{cfg.budget};
    const int target = 12 * cfg.c;
    const ChainDescriptor ch = find_long_chain(q, target, b);
    if (static_cast<int>(ch.vertices.size()) >= target) {
        if (stats) ++stats->witnesses_found["chain"];
        const ChainDescriptor sub = find_forced_subchain(chain_slice(ch, 0, static_cast<std::size_t>(target)));
        const std::string tail = sub.code.substr(1);
        if (tail.find('0') == std::string::npos) {
            const PathContext ctx = make_path_context(q, sub.vertices);
            PathOutcome po = rule_path(q, ctx, PathRuleConfig{cfg.c});
            if (auto* r = std::get_if<RuleSet>(&po)) return std::move(*r);
            if (auto* e = std::get_if<ExactPath>(&po)) return *e;
            if (stats) ++stats->fallbacks_taken;
            return rule_branch_around(q, ctx, static_cast<int>(sub.vertices.size() / 2));
        }
        if (tail.find('1') == std::string::npos) return rule_zero_chain(q, sub);
        return rule_easy_chain(q, sub);
    }
    if (ch.vertices.size() >= 6) {
        if (auto r = relaxed_chain_rule(q, ch, cfg, stats)) {
            if (stats) ++stats->witnesses_found["short-chain"];
            return std::move(*r);
        }
    }
    if (stats) ++stats->fallbacks_taken;
    const auto p4 = find_p4(q);
    if (!p4) throw InputError("select_rule expects a graph containing a P4");
    return rule_p4_trivial(q, *p4);
}

namespace {

struct Node {
    Cost cost = INF;
    std::vector<Pair> pairs;  // sorted
};

// (cost, pairs) lexicographic
bool better(const Node& a, const Node& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.pairs < b.pairs;
}

class Driver {
public:
    Driver(const SolverConfig& cfg) : cfg_(cfg) {
        // The 2+eps check only applies once c reaches the calibrated size.
        try {
            check_factor_ = cfg.c >= calibrate_c(cfg.epsilon, CalibrationFamily{}).chosen_c;
        } catch (const RefusalError&) {
            check_factor_ = false;
        }
    }

    Node run(const WeightedGraph& g, Cost k, int depth, RunStats& st, bool allow_parallel) {
        ++st.recursion_nodes;
        st.max_depth = std::max(st.max_depth, depth);
        bool recursed = false;
        Node out = body(g, k, depth, st, allow_parallel, recursed);
        if (!recursed) ++st.recursion_leaves;
        if (out.cost > k) return {};
        return out;
    }

private:
    Node body(const WeightedGraph& g, Cost k, int depth, RunStats& st, bool allow_parallel, bool& recursed) {
        if (k >= 0 && is_cograph(g)) return Node{0, {}};
        if (k <= 0) return {};
        if (!cfg_.strict_paper && p4_packing_bound(g) > k) return {};

        if (cfg_.enable_peeling) {
            PeelResult pr = peel_path_components(g);
            if (pr.components > 0 && pr.cost > 0) {
                st.peeled_components += static_cast<std::uint64_t>(pr.components);
                if (pr.cost > k) return {};
                recursed = true;
                Node sub = run(pr.rest, k - pr.cost, depth + 1, st, allow_parallel);
                if (sub.cost == INF) return {};
                Node out{pr.cost + sub.cost, std::move(pr.deletions)};
                for (auto [a, b] : sub.pairs) out.pairs.push_back(make_pair_sorted(pr.kept[a], pr.kept[b]));
                std::sort(out.pairs.begin(), out.pairs.end());
                return out;
            }
        }

        if (g.size() < cfg_.C) return from_outcome(brute_solve(g, k));

        const DecompositionResult d = modular_decomposition(g);
        const WeightedGraph& q = d.quotient;
        if (q.size() >= cfg_.C && !is_cograph(q)) {
            Selection sel = select_rule(q, cfg_, &st);
            if (auto* e = std::get_if<ExactPath>(&sel)) return combine(g, d, e->deletions, k, depth, st, recursed);
            return branch(g, d, std::get<RuleSet>(sel), k, depth, st, allow_parallel, recursed);
        }
        const SolveOutcome qs = brute_solve(q, k);
        if (!qs.feasible()) return {};
        return combine(g, d, qs.solution->pairs, k, depth, st, recursed);
    }

    static Node from_outcome(const SolveOutcome& o) {
        if (!o.feasible()) return {};
        return Node{o.cost, o.solution->pairs};
    }

    // Line 7: quotient solution plus each non-trivial factor.
    Node combine(const WeightedGraph& g, const DecompositionResult& d, const std::vector<Pair>& qpairs, Cost k,
                 int depth, RunStats& st, bool& recursed) {
        Node out;
        out.pairs = extend(g, d.partition, qpairs);
        out.cost = cost(g, std::span<const Pair>(out.pairs));
        if (out.cost > k) return {};
        for (const auto& block : d.partition.blocks) {
            if (block.size() < 2) continue;
            const WeightedGraph sub = induced_subgraph(g, std::span<const Vertex>(block));
            const Cost budget = cfg_.strict_paper ? k : k - out.cost;
            recursed = true;
            Node r = run(sub, budget, depth + 1, st, false);
            if (r.cost == INF) return {};
            out.cost = checked_add(out.cost, r.cost);
            for (auto [a, b] : r.pairs) out.pairs.push_back(make_pair_sorted(block[a], block[b]));
        }
        std::sort(out.pairs.begin(), out.pairs.end());
        return out;
    }

    void record(const RuleSet& rs, bool singleton_blocks, RunStats& st) {
        ++st.rules_fired[rs.provenance];
        if (is_fallback(rs.provenance)) ++st.fallbacks_taken;
        // peel credit is only realised when the quotient is the graph itself
        const BranchingVector used = cfg_.enable_peeling && singleton_blocks ? rs.effective() : rs.claimed;
        const double f = branching_factor(used);
        if (st.worst_rule.empty() || f > st.worst_factor) {
            st.worst_factor = f;
            st.worst_rule = rs.provenance;
        }
        if (check_factor_ && !is_fallback(rs.provenance) && branching_factor(rs.effective()) > 2.0 + cfg_.epsilon)
            ++st.factor_violations;
    }

    struct Branch {
        Cost cost;
        std::uint64_t index;
        std::vector<Pair> pairs;
    };

    Node branch(const WeightedGraph& g, const DecompositionResult& d, const RuleSet& rs, Cost k, int depth,
                RunStats& st, bool allow_parallel, bool& recursed) {
        record(rs, d.partition.blocks.size() == static_cast<std::size_t>(g.size()), st);
        std::vector<Branch> branches;
        for (std::uint64_t i = 0; i < rs.size(); ++i) {
            std::vector<Pair> ext = extend(g, d.partition, rs.set(i).pairs);
            const Cost c = cost(g, std::span<const Pair>(ext));
            if (c <= k) branches.push_back({c, i, std::move(ext)});
        }
        // cheap branches first so the incumbent tightens early
        std::stable_sort(branches.begin(), branches.end(),
                         [](const Branch& a, const Branch& b) { return a.cost < b.cost; });
        if (branches.empty()) return {};
        recursed = true;

        std::atomic<Cost> incumbent{INF};
        auto explore = [&](const Branch& b, RunStats& local, bool par) -> Node {
            const Cost bound = cfg_.strict_paper ? k : std::min(k, incumbent.load());
            if (b.cost > bound) return {};
            Node child = run(apply_edits(g, std::span<const Pair>(b.pairs)), bound - b.cost, depth + 1, local, par);
            if (child.cost == INF) return {};
            Node total{b.cost + child.cost, b.pairs};
            total.pairs.insert(total.pairs.end(), child.pairs.begin(), child.pairs.end());
            std::sort(total.pairs.begin(), total.pairs.end());
            Cost cur = incumbent.load();
            while (total.cost < cur && !incumbent.compare_exchange_weak(cur, total.cost)) {
            }
            return total;
        };

        Node best;
        if (cfg_.parallel && allow_parallel && branches.size() > 1) {
            const std::size_t workers =
                std::min<std::size_t>(branches.size(), std::max(2U, std::thread::hardware_concurrency()));
            std::atomic<std::size_t> next{0};
            std::vector<std::future<std::pair<Node, RunStats>>> futs;
            for (std::size_t w = 0; w < workers; ++w) {
                futs.push_back(std::async(std::launch::async, [&] {
                    RunStats local;
                    Node mine;
                    for (std::size_t i = next++; i < branches.size(); i = next++) {
                        Node r = explore(branches[i], local, false);
                        if (r.cost != INF && better(r, mine)) mine = std::move(r);
                    }
                    return std::make_pair(std::move(mine), std::move(local));
                }));
            }
            for (auto& f : futs) {
                auto [r, local] = f.get();
                st.merge(local);
                if (r.cost != INF && better(r, best)) best = std::move(r);
            }
        } else {
            for (const Branch& b : branches) {
                Node r = explore(b, st, allow_parallel);
                if (r.cost != INF && better(r, best)) best = std::move(r);
            }
        }
        return best;
    }

    const SolverConfig& cfg_;
    bool check_factor_ = false;
};

}  // namespace

SolveResult solve(const WeightedGraph& g, Cost k, const SolverConfig& cfg) {
    cfg.validate();
    if (k == INF) k = cfg.strict_paper ? total_edge_cost(g) : greedy_upper_bound(g);
    SolveResult res;
    Driver drv(cfg);
    Node n = drv.run(g, k, 0, res.stats, true);
    if (n.cost != INF) {
        res.outcome.cost = n.cost;
        res.outcome.solution = EditingSet(std::move(n.pairs));
    }
    return res;
}

}  // namespace cograph
