#include "cograph/editing.hpp"

#include <algorithm>
#include <string>

namespace cograph {

std::vector<Pair> normalize_pairs(std::vector<Pair> pairs) {
    for (auto& p : pairs) {
        if (p.first == p.second) throw InputError("self-pair " + std::to_string(p.first));
        p = make_pair_sorted(p.first, p.second);
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) throw InputError("duplicate pair in editing set");
    return pairs;
}

EditingSet::EditingSet(std::vector<Pair> p, Sigma s) : pairs(normalize_pairs(std::move(p))), sigma(s) {}

Cost cost(const WeightedGraph& g, std::span<const Pair> pairs) {
    Cost total = 0;
    for (auto [u, v] : pairs) total = checked_add(total, g.pair_weight(u, v));
    return total;
}

bool respects_sigma(const WeightedGraph& g, const EditingSet& e) {
    for (auto [u, v] : e.pairs) {
        const bool edge = g.adjacent(u, v);
        if (e.sigma == Sigma::Deletion && !edge) return false;
        if (e.sigma == Sigma::Insertion && edge) return false;
    }
    return true;
}

WeightedGraph apply_edits(const WeightedGraph& g, std::span<const Pair> pairs) {
    WeightedGraph h = g;
    for (auto [u, v] : pairs) h.toggle(u, v);
    return h;
}

namespace {

// P4-guided search. At a P4 with candidate pairs p1..pr the branches are
// "toggle p1", "keep p1, toggle p2", ... so every minimal solution is reached
// exactly once. Thresholds grow to the smallest pruned cost, hence the first
// threshold with a leaf is the optimum and all its leaves are optimal.
class BruteSearch {
public:
    BruteSearch(const WeightedGraph& g, Sigma sigma, bool collect)
        : g_(g), sigma_(sigma), collect_(collect),
          frozen_(static_cast<std::size_t>(g.size()), VertexSet(static_cast<std::size_t>(g.size()))) {}

    // Returns the optimum if it is <= k, else INF.
    Cost run(Cost k) {
        Cost threshold = 0;
        while (threshold <= k) {
            threshold_ = threshold;
            next_ = INF;
            found_ = false;
            dfs(0);
            if (found_) return threshold;
            if (next_ == INF) break;
            threshold = next_;
        }
        return INF;
    }

    const std::vector<Pair>& best() const { return best_; }
    std::vector<std::vector<Pair>>& all() { return all_; }

private:
    bool frozen(Pair p) const { return frozen_[static_cast<std::size_t>(p.first)].test(static_cast<std::size_t>(p.second)); }
    void set_frozen(Pair p, bool on) {
        frozen_[static_cast<std::size_t>(p.first)][static_cast<std::size_t>(p.second)] = on;
        frozen_[static_cast<std::size_t>(p.second)][static_cast<std::size_t>(p.first)] = on;
    }

    void candidates(const P4Witness& w, std::vector<Pair>& out) const {
        const auto& [a, b, c, d] = w.path;
        if (sigma_ != Sigma::Insertion) {
            out.push_back(make_pair_sorted(a, b));
            out.push_back(make_pair_sorted(b, c));
            out.push_back(make_pair_sorted(c, d));
        }
        if (sigma_ != Sigma::Deletion) {
            out.push_back(make_pair_sorted(a, c));
            out.push_back(make_pair_sorted(b, d));
            out.push_back(make_pair_sorted(a, d));
        }
    }

    void leaf() {
        std::vector<Pair> s = chosen_;
        std::sort(s.begin(), s.end());
        if (collect_) all_.push_back(s);
        if (!found_ || s < best_) best_ = std::move(s);
        found_ = true;
    }

    void dfs(Cost spent) {
        auto p4 = find_p4(g_);
        if (!p4) {
            leaf();
            return;
        }
        std::vector<Pair> cand;
        candidates(*p4, cand);
        std::vector<Pair> froze_here;
        for (Pair p : cand) {
            if (frozen(p)) continue;
            const Cost c = checked_add(spent, g_.pair_weight(p.first, p.second));
            if (c > threshold_) {
                next_ = std::min(next_, c);
            } else {
                g_.toggle(p.first, p.second);
                chosen_.push_back(p);
                dfs(c);
                chosen_.pop_back();
                g_.toggle(p.first, p.second);
            }
            set_frozen(p, true);
            froze_here.push_back(p);
        }
        for (Pair p : froze_here) set_frozen(p, false);
    }

    WeightedGraph g_;
    Sigma sigma_;
    bool collect_;
    std::vector<VertexSet> frozen_;
    std::vector<Pair> chosen_;
    Cost threshold_ = 0;
    Cost next_ = INF;
    bool found_ = false;
    std::vector<Pair> best_;
    std::vector<std::vector<Pair>> all_;
};

}  // namespace

SolveOutcome brute_solve(const WeightedGraph& g, Cost k, Sigma sigma) {
    if (k < 0) return SolveOutcome::infeasible();
    BruteSearch search(g, sigma, false);
    const Cost opt = search.run(k);
    if (opt == INF) return SolveOutcome::infeasible();
    return SolveOutcome{opt, EditingSet(search.best(), sigma)};
}

std::vector<EditingSet> enumerate_optimal_deletion_sets(const WeightedGraph& g, int cap) {
    if (g.size() > cap)
        throw RefusalError("enumeration refused: " + std::to_string(g.size()) + " vertices exceeds cap " +
                           std::to_string(cap));
    BruteSearch search(g, Sigma::Deletion, true);
    search.run(INF - 1);
    auto& all = search.all();
    std::sort(all.begin(), all.end());
    std::vector<EditingSet> out;
    out.reserve(all.size());
    for (auto& s : all) out.emplace_back(std::move(s), Sigma::Deletion);
    return out;
}

namespace {

void check_rule_sets(const WeightedGraph& g, std::span<const EditingSet> sets) {
    for (const auto& s : sets) {
        if (s.pairs.empty()) throw InputError("rule set contains an empty editing set");
        if (!respects_sigma(g, s)) throw InputError("rule set contains a pair that is not an edge");
    }
}

}  // namespace

bool verify_safe(const WeightedGraph& g, std::span<const EditingSet> sets, int cap) {
    check_rule_sets(g, sets);
    const auto optimal = enumerate_optimal_deletion_sets(g, cap);
    for (const auto& opt : optimal)
        for (const auto& s : sets)
            if (std::includes(opt.pairs.begin(), opt.pairs.end(), s.pairs.begin(), s.pairs.end())) return true;
    return false;
}

bool verify_safe_by_cost(const WeightedGraph& g, std::span<const EditingSet> sets) {
    check_rule_sets(g, sets);
    const Cost opt = brute_solve(g, INF - 1).cost;
    for (const auto& s : sets) {
        const Cost c = cost(g, s);
        if (c > opt) continue;
        if (brute_solve(apply_edits(g, s), opt - c).cost == opt - c) return true;
    }
    return false;
}

}  // namespace cograph
