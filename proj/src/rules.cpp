#include "cograph/rules.hpp"

#include <algorithm>
#include <functional>

namespace cograph {

std::vector<Pair> SetFamily::materialize(std::uint64_t index) const {
    std::vector<Pair> out = base;
    for (std::size_t b = 0; b < choices.size(); ++b) out.push_back(choices[b][(index >> b) & 1U]);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t RuleSet::size() const {
    std::uint64_t n = 0;
    for (const auto& f : families) n += f.count();
    return n;
}

EditingSet RuleSet::set(std::uint64_t index) const {
    for (const auto& f : families) {
        if (index < f.count()) return EditingSet(f.materialize(index));
        index -= f.count();
    }
    throw InputError("rule set index out of range");
}

std::vector<EditingSet> RuleSet::materialize_all() const {
    std::vector<EditingSet> out;
    for (std::uint64_t i = 0; i < size(); ++i) out.push_back(set(i));
    return out;
}

BranchingVector RuleSet::effective() const {
    if (peel_credit == 0) return claimed;
    std::vector<BranchTerm> t = claimed.terms();
    for (auto& e : t) e.value += static_cast<double>(peel_credit);
    return BranchingVector(std::move(t));
}

namespace {

Pair P(Vertex a, Vertex b) { return make_pair_sorted(a, b); }

SetFamily single(std::vector<Pair> base) { return SetFamily{std::move(base), {}}; }

BranchingVector claim_by_count(const std::vector<SetFamily>& fams) {
    std::vector<BranchTerm> t;
    for (const auto& f : fams) t.push_back({static_cast<double>(f.base.size() + f.choices.size()), f.count()});
    return BranchingVector(std::move(t));
}

RuleSet make_rule(std::vector<SetFamily> fams, std::string provenance) {
    RuleSet r;
    r.claimed = claim_by_count(fams);
    r.families = std::move(fams);
    r.provenance = std::move(provenance);
    return r;
}

bool contains(const std::vector<Pair>& v, Pair p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

std::vector<Pair> force_closure(const WeightedGraph& g, std::vector<Pair> deleted, const std::vector<Pair>& conserved) {
    WeightedGraph h = g;
    for (auto& p : deleted) {
        p = P(p.first, p.second);
        if (!g.adjacent(p.first, p.second)) throw InputError("forced deletion of a non-edge");
        h.remove_edge(p.first, p.second);
    }
    std::vector<Pair> keep;
    for (auto [a, b] : conserved)
        if (h.adjacent(a, b)) keep.push_back(P(a, b));
    auto force = [&](Vertex a, Vertex b) {
        const Pair p = P(a, b);
        if (contains(keep, p) || !h.adjacent(a, b)) return false;
        h.remove_edge(a, b);
        deleted.push_back(p);
        return true;
    };
    const int n = g.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < keep.size(); ++s) {
            for (std::size_t t = 0; t < keep.size(); ++t) {
                if (s == t) continue;
                auto [a, b] = keep[s];
                auto [c, d] = keep[t];
                // two conserved edges sharing a vertex: x - y - z
                for (auto [x, y] : {Pair{a, b}, Pair{b, a}}) {
                    for (auto [y2, z] : {Pair{c, d}, Pair{d, c}}) {
                        if (y != y2 || x == z || h.adjacent(x, z)) continue;
                        for (Vertex w = 0; w < n; ++w) {
                            if (w == x || w == y || w == z) continue;
                            if (h.adjacent(w, x) && !h.adjacent(w, y) && !h.adjacent(w, z)) changed |= force(w, x);
                        }
                    }
                }
                // disjoint conserved edges at both ends: a' - b' - c' - d'
                if (a == c || a == d || b == c || b == d) continue;
                for (auto [p0, p1] : {Pair{a, b}, Pair{b, a}}) {
                    for (auto [p2, p3] : {Pair{c, d}, Pair{d, c}}) {
                        if (h.adjacent(p1, p2) && !h.adjacent(p0, p2) && !h.adjacent(p0, p3) && !h.adjacent(p1, p3))
                            changed |= force(p1, p2);
                    }
                }
            }
        }
    }
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    return deleted;
}

RuleSet rule_p4_trivial(const WeightedGraph& g, const P4Witness& w) {
    const auto& [a, b, c, d] = w.path;
    if (!is_induced_p4(g, a, b, c, d)) throw InputError("not an induced P4");
    return make_rule({single({P(a, b)}), single({P(b, c)}), single({P(c, d)})}, "p4");
}

PathContext make_path_context(const WeightedGraph& g, std::vector<Vertex> path) {
    const std::size_t L = path.size();
    for (Vertex v : path)
        if (v < 0 || v >= g.size()) throw InputError("unknown vertex id " + std::to_string(v));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j) {
            if (path[i] == path[j]) throw InputError("path repeats a vertex");
            if (g.adjacent(path[i], path[j]) != (j == i + 1)) throw InputError("not an induced path");
        }
    PathContext ctx;
    ctx.path = std::move(path);
    const VertexSet on_path = make_set(g.size(), ctx.path);
    ctx.outside_neighbors = VertexSet(static_cast<std::size_t>(g.size()));
    for (Vertex v : ctx.path) ctx.outside_neighbors |= g.neighbors(v);
    ctx.outside_neighbors -= on_path;
    ctx.U = VertexSet(static_cast<std::size_t>(g.size()));
    for (auto u = ctx.outside_neighbors.find_first(); u != VertexSet::npos; u = ctx.outside_neighbors.find_next(u))
        if (!on_path.is_subset_of(g.neighbors(static_cast<Vertex>(u)))) ctx.U.set(u);
    for (Vertex v : ctx.path) ctx.light.push_back((g.neighbors(v) - on_path).none() ? 1 : 0);
    return ctx;
}

namespace {

// 1-based view of the path, optionally reversed.
struct PathView {
    const WeightedGraph& g;
    const PathContext& ctx;
    bool reversed = false;

    int L() const { return static_cast<int>(ctx.path.size()); }
    int at(int i) const { return reversed ? L() + 1 - i : i; }
    Vertex x(int i) const { return ctx.path[static_cast<std::size_t>(at(i) - 1)]; }
    Pair e(int i) const { return P(x(i), x(i + 1)); }  // x_i x_{i+1}
    Cost w(int i) const { return g.pair_weight(x(i), x(i + 1)); }
    bool light(int i) const { return ctx.light[static_cast<std::size_t>(at(i) - 1)] != 0; }
    bool interior(int i) const { return i >= 2 && i <= L() - 1; }
};

struct Case {
    std::vector<Pair> deleted;
    std::vector<Pair> conserved;
};

RuleSet from_cases(const WeightedGraph& g, const std::vector<Case>& cases, std::string provenance) {
    std::vector<SetFamily> fams;
    for (const auto& c : cases) fams.push_back(single(force_closure(g, c.deleted, c.conserved)));
    return make_rule(std::move(fams), std::move(provenance));
}

void check_around_index(const PathView& pv, int i) {
    if (i < 3 || i > pv.L() - 3) throw InputError("branching around needs 3 <= i <= L-3");
}

RuleSet branch_around_forced(const PathView& pv, int i, std::string provenance) {
    check_around_index(pv, i);
    return from_cases(pv.g,
                      {
                          {{pv.e(i)}, {}},
                          {{pv.e(i - 1), pv.e(i + 1)}, {pv.e(i)}},
                          {{pv.e(i - 2), pv.e(i + 1)}, {pv.e(i), pv.e(i - 1)}},
                          {{pv.e(i - 1), pv.e(i + 2)}, {pv.e(i), pv.e(i + 1)}},
                      },
                      std::move(provenance));
}

// p a b c d e f g = x_t .. x_{t+7}; v adjacent to c and d but not e.
std::optional<RuleSet> abcdef(const PathView& pv, int t) {
    if (t < 1 || t + 7 > pv.L()) return std::nullopt;
    const WeightedGraph& g = pv.g;
    const Vertex c = pv.x(t + 3), d = pv.x(t + 4), e = pv.x(t + 5);
    VertexSet common = g.neighbors(c) & g.neighbors(d);
    common -= g.neighbors(e);
    common.reset(static_cast<std::size_t>(e));
    const auto v = common.find_first();
    if (v == VertexSet::npos) return std::nullopt;
    const Pair pa = pv.e(t), ab = pv.e(t + 1), bc = pv.e(t + 2), cd = pv.e(t + 3), de = pv.e(t + 4), ef = pv.e(t + 5);
    (void)pa;
    const Pair dv = P(d, static_cast<Vertex>(v));
    return from_cases(g,
                      {
                          {{bc}, {}},
                          {{}, {ab, bc}},
                          {{ab, de}, {bc}},
                          {{ab, cd}, {bc, de, ef}},
                          {{ab, ef, cd}, {bc, de, dv}},
                          {{ab, ef, cd, dv}, {bc, de}},
                      },
                      "path:two-heavy-abcdef");
}

std::optional<RuleSet> weighted_edge(const PathView& pv) {
    for (int i = 3; i <= pv.L() - 3; ++i) {
        if (pv.w(i) < 2) continue;
        RuleSet r = make_rule({single({pv.e(i)}), single({pv.e(i - 1), pv.e(i + 1)}),
                               single({pv.e(i - 2), pv.e(i + 1)}), single({pv.e(i - 1), pv.e(i + 2)})},
                              "path:weighted-edge");
        r.claimed = BranchingVector{2, 2, 2, 2};
        return r;
    }
    return std::nullopt;
}

std::optional<RuleSet> degree_two_run(const PathView& pv, int c) {
    const int L = pv.L();
    const int need = std::max(c, 8);
    int j = 2;
    while (j <= L - 1) {
        if (pv.g.degree(pv.x(j)) != 2) {
            ++j;
            continue;
        }
        int l = j;
        while (l + 1 <= L - 1 && pv.g.degree(pv.x(l + 1)) == 2) ++l;
        if (l - j + 1 >= need) {
            std::vector<SetFamily> fams;
            Cost credit = INF;
            for (int a = j; a <= j + 2; ++a)
                for (int b = l - 3; b <= l - 1; ++b) {
                    fams.push_back(single({pv.e(a), pv.e(b)}));
                    std::vector<Vertex> piece;
                    for (int q = a + 1; q <= b; ++q) piece.push_back(pv.x(q));
                    credit = std::min(credit, path_dp_on(pv.g, piece).cost);
                }
            RuleSet r = make_rule(std::move(fams), "path:degree-two-run");
            r.peel_credit = credit;
            return r;
        }
        j = l + 1;
    }
    return std::nullopt;
}

std::optional<RuleSet> many_neighbours(const PathView& pv, int c) {
    const WeightedGraph& g = pv.g;
    const int L = pv.L();
    const int need = (c + 2) / 3;
    const VertexSet& U = pv.ctx.U;
    for (auto uu = U.find_first(); uu != VertexSet::npos; uu = U.find_next(uu)) {
        const auto u = static_cast<Vertex>(uu);
        std::vector<int> nb;
        for (int p = 1; p <= L; ++p)
            if (g.adjacent(u, pv.x(p))) nb.push_back(p);
        if (static_cast<int>(nb.size()) < need) continue;
        int i = 1;
        while (i < L && g.adjacent(u, pv.x(i)) == g.adjacent(u, pv.x(i + 1))) ++i;
        if (i >= L) continue;
        const int t = g.adjacent(u, pv.x(i + 1)) ? i + 1 : i;  // neighbour of u
        const int s = t == i + 1 ? i : i + 1;                  // non-neighbour
        std::vector<Pair> far;
        for (int p : nb)
            if (std::abs(p - s) >= 2 && std::abs(p - t) >= 2) far.push_back(P(u, pv.x(p)));
        if (far.size() < 5) continue;
        return make_rule({single({pv.e(i)}), single({P(u, pv.x(t))}), single(std::move(far))},
                         "path:many-neighbours");
    }
    return std::nullopt;
}

std::optional<RuleSet> three_neighbours(const WeightedGraph& g, const PathContext& ctx) {
    const VertexSet& U = ctx.U;
    for (auto uu = U.find_first(); uu != VertexSet::npos; uu = U.find_next(uu)) {
        const auto u = static_cast<Vertex>(uu);
        int count = 0;
        for (Vertex x : ctx.path) count += g.adjacent(u, x) ? 1 : 0;
        if (count < 3) continue;
        for (bool rev : {false, true}) {
            PathView pv{g, ctx, rev};
            const int L = pv.L();
            auto adj = [&](int p) { return g.adjacent(u, pv.x(p)); };
            for (int i = 4; i <= L - 2; ++i) {
                if (adj(i - 2) || adj(i - 1) || !adj(i)) continue;
                std::vector<Vertex> others;
                if (!adj(i + 1)) {
                    for (int p = 1; p <= L; ++p)
                        if (p != i && adj(p)) others.push_back(pv.x(p));
                    const Pair uy = P(u, others[0]), uz = P(u, others[1]), xu = P(pv.x(i), u);
                    return make_rule(
                        {
                            single({pv.e(i - 1)}),
                            single({pv.e(i - 2), pv.e(i), xu}),
                            single({pv.e(i - 2), pv.e(i), uy, uz}),
                            single({pv.e(i - 3), pv.e(i), xu}),
                            single({pv.e(i - 2), pv.e(i + 1), xu}),
                            single({pv.e(i - 2), pv.e(i + 1), uy, uz}),
                        },
                        "path:three-neighbours");
                }
                for (int p = 1; p <= L; ++p)
                    if (p != i && p != i + 1 && adj(p)) others.push_back(pv.x(p));
                const Pair uy = P(u, others[0]), xu = P(pv.x(i), u), x1u = P(pv.x(i + 1), u);
                return make_rule(
                    {
                        single({pv.e(i - 1)}),
                        single({xu, pv.e(i)}),
                        single({xu, pv.e(i - 2), pv.e(i + 1), x1u}),
                        single({pv.e(i + 1), pv.e(i - 2), uy}),
                        single({pv.e(i), x1u, pv.e(i - 2), uy}),
                    },
                    "path:three-neighbours-triangle");
            }
        }
    }
    return std::nullopt;
}

// lights x_{i-1}, x_i, x_{i+1}
std::optional<RuleSet> three_light(const PathView& pv, int i) {
    if (i < 4 || i + 2 > pv.L()) return std::nullopt;
    if (!pv.light(i - 1) || !pv.light(i) || !pv.light(i + 1)) return std::nullopt;
    if (pv.w(i - 1) != 1 || pv.w(i) != 1 || pv.w(i + 1) != 1) return std::nullopt;
    return make_rule({single({pv.e(i - 2), pv.e(i + 1)}), single({pv.e(i - 1)}), single({pv.e(i - 3), pv.e(i)})},
                     "path:three-light");
}

std::optional<RuleSet> two_light(const WeightedGraph& g, const PathContext& ctx) {
    PathView fwd{g, ctx, false};
    PathView bwd{g, ctx, true};
    const int L = fwd.L();
    for (int i = 3; i <= L - 3; ++i) {
        if (!fwd.interior(i) || !fwd.interior(i + 1) || !fwd.light(i) || !fwd.light(i + 1)) continue;
        if (auto r = three_light(fwd, i)) return r;
        // lights x_i, x_{i+1}, x_{i+2} read backwards
        if (auto r = three_light(bwd, L - i)) return r;
        return branch_around_forced(fwd, i, "path:two-light");
    }
    return std::nullopt;
}

std::optional<RuleSet> light_heavy_light(const WeightedGraph& g, const PathContext& ctx) {
    for (bool rev : {false, true}) {
        PathView pv{g, ctx, rev};
        const int L = pv.L();
        for (int i = 4; i <= L - 2; ++i) {
            if (!pv.interior(i - 1) || !pv.interior(i + 1)) continue;
            if (!pv.light(i - 1) || pv.light(i) || !pv.light(i + 1)) continue;
            if (pv.w(i) != 1 || pv.w(i + 1) != 1) continue;
            return make_rule({single({pv.e(i - 1)}), single({pv.e(i - 3), pv.e(i)}), single({pv.e(i - 2), pv.e(i + 1)})},
                             "path:light-heavy-light");
        }
    }
    return std::nullopt;
}

std::optional<RuleSet> two_heavy(const WeightedGraph& g, const PathContext& ctx) {
    PathView pv{g, ctx, false};
    const int L = pv.L();
    int first = -1;
    for (int i = 2; i + 1 <= L - 1; ++i)
        if (!pv.light(i) && !pv.light(i + 1)) {
            first = i;
            break;
        }
    if (first < 0) return std::nullopt;
    std::vector<RuleSet> cands;
    for (int j = first - 1; j <= first + 2; ++j)
        if (j >= 3 && j <= L - 3) cands.push_back(branch_around_forced(pv, j, "path:two-heavy"));
    for (bool rev : {false, true}) {
        PathView v{g, ctx, rev};
        for (int t = 1; t + 7 <= L; ++t)
            if (auto r = abcdef(v, t)) cands.push_back(std::move(*r));
    }
    if (cands.empty()) return std::nullopt;
    std::size_t best = 0;
    double best_f = branching_factor(cands[0].claimed);
    for (std::size_t k = 1; k < cands.size(); ++k) {
        const double f = branching_factor(cands[k].claimed);
        if (f < best_f) {
            best = k;
            best_f = f;
        }
    }
    return std::move(cands[best]);
}

}  // namespace

RuleSet rule_branch_around(const WeightedGraph& g, const PathContext& ctx, int i) {
    PathView pv{g, ctx, false};
    check_around_index(pv, i);
    RuleSet r = make_rule({single({pv.e(i)}), single({pv.e(i - 1), pv.e(i + 1)}), single({pv.e(i - 2), pv.e(i + 1)}),
                           single({pv.e(i - 1), pv.e(i + 2)})},
                          "branch-around");
    return r;
}

std::optional<RuleSet> rule_two_heavy_detour(const WeightedGraph& g, const PathContext& ctx, int t, bool reversed) {
    return abcdef(PathView{g, ctx, reversed}, t);
}

RuleSet rule_branch_around_forced(const WeightedGraph& g, const PathContext& ctx, int i) {
    return branch_around_forced(PathView{g, ctx, false}, i, "branch-around-forced");
}

RuleSet rule_fixed(const WeightedGraph& g, const Witness& w) {
    if (w.family == Family::Chain) throw InputError("chain witnesses use the chain rules");
    if (!verify_witness(g, w)) throw InputError("witness does not match the graph");
    const Family f = w.family;
    const int c = w.c;
    auto U = [&] { return w.embedding[static_cast<std::size_t>(role_u())]; };
    auto V = [&](int i) { return w.embedding[static_cast<std::size_t>(role_v(f, i))]; };
    auto W = [&](int i) { return w.embedding[static_cast<std::size_t>(role_w(f, c, i))]; };
    std::vector<SetFamily> fams;
    switch (f) {
        case Family::SubdividedStar: {
            std::vector<Pair> rest;
            for (int i = 2; i <= c; ++i) rest.push_back(P(U(), V(i)));
            fams = {single({P(W(1), V(1))}), single({P(U(), V(1))}), single(rest)};
            break;
        }
        case Family::CoSubdividedStar: {
            SetFamily combo;
            for (int i = 2; i <= c; ++i) combo.choices.push_back({P(V(1), W(i)), P(W(i), W(1))});
            fams = {single({P(U(), V(1))}), combo};
            break;
        }
        case Family::LineK2c: {
            std::vector<Pair> rest;
            for (int i = 3; i <= c; ++i) rest.push_back(P(W(2), W(i)));
            fams = {single({P(V(1), V(2))}), single({P(V(2), W(2))}), single(rest)};
            break;
        }
        case Family::CoLineK2c: {
            SetFamily combo;
            for (int i = 3; i <= c; ++i) combo.choices.push_back({P(W(2), V(i)), P(V(i), W(1))});
            fams = {single({P(V(1), W(2))}), combo};
            break;
        }
        case Family::ThinSpider: {
            SetFamily combo;
            for (int i = 2; i <= c; ++i) combo.choices.push_back({P(W(1), W(i)), P(W(i), V(i))});
            fams = {single({P(V(1), W(1))}), combo};
            break;
        }
        case Family::ThickSpider: {
            SetFamily combo;
            combo.base = {P(W(1), W(2))};
            for (int i = 3; i <= c; ++i) combo.choices.push_back({P(W(1), V(i)), P(V(i), W(2))});
            fams = {single({P(V(1), W(2))}), single({P(W(1), V(2))}), combo};
            break;
        }
        case Family::HalfGraph:
        case Family::HStar: {
            SetFamily combo;
            for (int i = 2; i <= c; ++i) combo.choices.push_back({P(V(1), W(i)), P(V(i), W(i))});
            fams = {single({f == Family::HalfGraph ? P(V(1), W(1)) : P(U(), V(1))}), combo};
            break;
        }
        case Family::CoHalfGraph: {
            SetFamily combo;
            for (int i = 1; i <= c - 1; ++i) combo.choices.push_back({P(V(c), W(i)), P(W(i), W(c))});
            fams = {single({P(V(1), V(c))}), combo};
            break;
        }
        case Family::HPrime: {
            std::vector<Pair> rest;
            for (int i = 1; i < c; ++i) rest.push_back(P(W(c), W(i)));
            fams = {single({P(U(), V(c))}), single({P(V(c), W(c))}), single(rest)};
            break;
        }
        case Family::CoHPrime: {
            std::vector<Pair> rest;
            for (int j = 2; j <= c; ++j) rest.push_back(P(U(), W(j)));
            fams = {single({P(V(2), W(1))}), single({P(W(1), U())}), single(rest)};
            break;
        }
        case Family::CoHStar: {
            SetFamily combo;
            for (int i = 2; i <= c; ++i) combo.choices.push_back({P(U(), V(i)), P(V(i), V(1))});
            fams = {single({P(W(c), U())}), combo};
            break;
        }
        case Family::Chain: break;
    }
    return make_rule(std::move(fams), std::string("fixed:") + to_string(f));
}

RuleSet rule_easy_chain(const WeightedGraph& g, const ChainDescriptor& ch) {
    if (!verify_chain(g, ch)) throw InputError("not a chain of the graph");
    const int c = static_cast<int>(ch.vertices.size());
    if (c < 6) throw InputError("easy chain rules need at least 6 vertices");
    auto v = [&](int i) { return ch.vertices[static_cast<std::size_t>(i - 1)]; };
    const std::string& code = ch.code;
    auto ends = [&](const std::string& s) { return code.compare(code.size() - s.size(), s.size(), s) == 0; };
    if (ends("0101")) {
        SetFamily combo;
        combo.base = {P(v(c - 3), v(c - 1))};
        for (int i = 1; i <= c - 5; ++i) combo.choices.push_back({P(v(i), v(c - 3)), P(v(i), v(c - 1))});
        return make_rule({single({P(v(c - 3), v(c - 2))}), single({P(v(c - 1), v(c))}), combo}, "easy-chain:0101");
    }
    if (ends("001")) {
        SetFamily combo;
        for (int i = 1; i <= c - 4; ++i) combo.choices.push_back({P(v(i), v(c - 2)), P(v(i), v(c - 1))});
        return make_rule({single({P(v(c), v(c - 1))}), combo}, "easy-chain:001");
    }
    if (ends("011")) {
        std::vector<Pair> rest;
        for (int i = 1; i <= c - 4; ++i) rest.push_back(P(v(i), v(c - 2)));
        return make_rule({single({P(v(c - 1), v(c))}), single({P(v(c - 2), v(c - 1))}), single(rest)},
                         "easy-chain:011");
    }
    throw InputError("chain does not end with 0101, 001 or 011");
}

RuleSet rule_zero_chain(const WeightedGraph& g, const ChainDescriptor& ch) {
    if (!verify_chain(g, ch)) throw InputError("not a chain of the graph");
    const int c = static_cast<int>(ch.vertices.size());
    if (c < 6) throw InputError("zero chain rule needs at least 6 vertices");
    if (ch.code.find('1', 1) != std::string::npos) throw InputError("chain is not all-0");
    // In the complement the chain is the path x_1 - ... - x_c; each pair
    // inserted there is an edge deleted here.
    auto x = [&](int i) { return ch.vertices[static_cast<std::size_t>(i - 1)]; };
    std::vector<SetFamily> fams;
    {
        std::vector<Pair> s;
        for (int j = 4; j <= c; ++j) s.push_back(P(x(2), x(j)));
        fams.push_back(single(s));
    }
    fams.push_back(single({P(x(1), x(4))}));
    for (int i = 5; i <= c; ++i) {
        std::vector<Pair> s{P(x(1), x(i))};
        for (int j = 4; j <= i - 1; ++j) s.push_back(P(x(2), x(j)));
        for (int j = 3; j <= i - 2; ++j) s.push_back(P(x(i), x(j)));
        fams.push_back(single(s));
    }
    {
        std::vector<Pair> s{P(x(1), x(3))};
        for (int j = 5; j <= c; ++j) s.push_back(P(x(3), x(j)));
        fams.push_back(single(s));
    }
    // x_1 x_3 inserted: the same case split on the path x_1, x_3, x_4, ..., x_c
    for (int j = 5; j <= c; ++j) {
        std::vector<Pair> s{P(x(1), x(3)), P(x(1), x(j))};
        for (int q = 5; q <= j - 1; ++q) s.push_back(P(x(3), x(q)));
        for (int q = 4; q <= j - 2; ++q) s.push_back(P(x(j), x(q)));
        fams.push_back(single(s));
    }
    return make_rule(std::move(fams), "zero-chain");
}

ExactPath path_dp_on(const WeightedGraph& g, const std::vector<Vertex>& order) {
    const int L = static_cast<int>(order.size());
    for (int i = 0; i + 1 < L; ++i)
        if (!g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)]))
            throw InputError("path order has a missing edge");
    // ew(t): weight of x_t x_{t+1}, 1-based
    auto ew = [&](int t) {
        return g.pair_weight(order[static_cast<std::size_t>(t - 1)], order[static_cast<std::size_t>(t)]);
    };
    std::vector<Cost> F(static_cast<std::size_t>(L + 1), 0);
    std::vector<int> last(static_cast<std::size_t>(L + 1), 0);
    for (int i = 4; i <= L; ++i) {
        Cost best = INF;
        for (int s = 1; s <= 3; ++s) {
            const Cost v = checked_add(F[static_cast<std::size_t>(i - s)], ew(i - s));
            if (v < best) {
                best = v;
                last[static_cast<std::size_t>(i)] = s;
            }
        }
        F[static_cast<std::size_t>(i)] = best;
    }
    ExactPath out;
    out.cost = F[static_cast<std::size_t>(L)];
    for (int i = L; i >= 4;) {
        const int s = last[static_cast<std::size_t>(i)];
        out.deletions.push_back(P(order[static_cast<std::size_t>(i - s - 1)], order[static_cast<std::size_t>(i - s)]));
        i -= s;
    }
    std::sort(out.deletions.begin(), out.deletions.end());
    return out;
}

ExactPath path_dp(const WeightedGraph& g) {
    auto order = as_path_graph(g);
    if (!order) throw InputError("path_dp expects a path graph");
    return path_dp_on(g, *order);
}

PathOutcome rule_path(const WeightedGraph& g, const PathContext& ctx, const PathRuleConfig& cfg) {
    if (as_path_graph(g)) return path_dp(g);
    PathView pv{g, ctx, false};
    if (pv.L() < 6) return std::monostate{};
    if (auto r = weighted_edge(pv)) return std::move(*r);
    if (auto r = degree_two_run(pv, cfg.c)) return std::move(*r);
    if (auto r = many_neighbours(pv, cfg.c)) return std::move(*r);
    if (auto r = three_neighbours(g, ctx)) return std::move(*r);
    if (auto r = two_light(g, ctx)) return std::move(*r);
    if (auto r = light_heavy_light(g, ctx)) return std::move(*r);
    if (auto r = two_heavy(g, ctx)) return std::move(*r);
    return std::monostate{};
}

}  // namespace cograph
