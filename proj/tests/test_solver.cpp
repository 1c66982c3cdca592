#include <doctest.h>

#include <random>

#include "cograph/editing.hpp"
#include "cograph/modular.hpp"
#include "cograph/solver.hpp"
#include "oracle.hpp"
#include "triggers.hpp"

using namespace cograph;

namespace {

SolverConfig small_c(int C, bool peel = true) {
    SolverConfig cfg;
    cfg.C = C;
    cfg.enable_peeling = peel;
    return cfg;
}

void check_solution(const WeightedGraph& g, const SolveResult& r) {
    REQUIRE(r.outcome.feasible());
    REQUIRE(r.outcome.solution.has_value());
    CHECK(respects_sigma(g, *r.outcome.solution));
    CHECK(cost(g, *r.outcome.solution) == r.outcome.cost);
    CHECK(is_cograph(apply_edits(g, *r.outcome.solution)));
}

}  // namespace

TEST_CASE("named graphs") {
    CHECK(solve(oracle::cycle(4), 0).outcome.cost == 0);
    CHECK(solve(oracle::path(4), 1).outcome.cost == 1);
    CHECK_FALSE(solve(oracle::path(4), 0).outcome.feasible());
    // C4 with a pendant
    const WeightedGraph banner = oracle::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    for (int C : {4, 12}) {
        const SolveResult r = solve(banner, INF, small_c(C));
        CHECK(r.outcome.cost == 1);
        check_solution(banner, r);
    }
}

TEST_CASE("matches the exact solver on small graphs") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 4 + static_cast<int>(rng() % 5);
        WeightedGraph g = oracle::gnp(n, 0.5, rng);
        if (rep % 3 == 0)
            for (int v = 0; v < n; ++v) g.set_weight(v, 1 + rng() % 3);
        const Cost opt = brute_solve(g, INF).cost;
        for (int C : {4, 6}) {
            for (bool peel : {false, true}) {
                INFO("rep " << rep << " C " << C << " peel " << peel);
                const SolveResult r = solve(g, INF, small_c(C, peel));
                CHECK(r.outcome.cost == opt);
                check_solution(g, r);
                if (opt > 0) CHECK_FALSE(solve(g, opt - 1, small_c(C, peel)).outcome.feasible());
                CHECK(solve(g, opt, small_c(C, peel)).outcome.cost == opt);
            }
        }
    }
}

TEST_CASE("peeling") {
    // P7 plus a disjoint triangle
    WeightedGraph g(10);
    for (int i = 0; i + 1 < 7; ++i) g.add_edge(i, i + 1);
    g.add_edge(7, 8);
    g.add_edge(8, 9);
    g.add_edge(7, 9);
    const PeelResult p = peel_path_components(g);
    CHECK(p.cost == 2);
    CHECK(p.components == 1);
    CHECK(p.rest.size() == 3);
    CHECK(p.kept == std::vector<Vertex>{7, 8, 9});
    CHECK(is_cograph(apply_edits(g, std::span<const Pair>(p.deletions))));
    CHECK(is_cograph(p.rest));

    const PeelResult none = peel_path_components(oracle::cycle(5));
    CHECK(none.components == 0);
    CHECK(none.rest.size() == 5);

    const PeelResult all = peel_path_components(oracle::path(9));
    CHECK(all.rest.size() == 0);
    CHECK(all.cost == 2);

    const SolveResult r = solve(g, INF, small_c(4));
    CHECK(r.outcome.cost == 2);
    CHECK(r.stats.peeled_components >= 1);
}

TEST_CASE("rule selection") {
    SolverConfig cfg;
    {
        const auto gf = generate_family(Family::ThinSpider, 4);
        RunStats st;
        const Selection s = select_rule(gf.graph, cfg, &st);
        REQUIRE(std::holds_alternative<RuleSet>(s));
        CHECK(std::get<RuleSet>(s).provenance.rfind("fixed:", 0) == 0);
        CHECK(st.witnesses_found.size() == 1);
    }
    {
        const Selection s = select_rule(oracle::path(12), cfg);
        REQUIRE(std::holds_alternative<ExactPath>(s));
        CHECK(std::get<ExactPath>(s).cost == 3);
    }
    {
        // bull: prime, too small for any family or a long chain
        const WeightedGraph bull = oracle::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
        REQUIRE(is_prime(bull));
        RunStats st;
        const Selection s = select_rule(bull, cfg, &st);
        REQUIRE(std::holds_alternative<RuleSet>(s));
        CHECK(std::get<RuleSet>(s).provenance == "p4");
        CHECK(st.fallbacks_taken == 1);
    }
}

TEST_CASE("monotone in k") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const WeightedGraph g = oracle::gnp(9, 0.5, rng);
        const Cost opt = solve(g, INF, small_c(4)).outcome.cost;
        for (Cost k = 0; k <= opt + 2; ++k) {
            const SolveResult r = solve(g, k, small_c(4));
            CHECK(r.outcome.feasible() == (k >= opt));
            if (r.outcome.feasible()) CHECK(r.outcome.cost == opt);
        }
    }
}

TEST_CASE("strict and parallel runs agree with the default") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 15; ++rep) {
        const WeightedGraph g = oracle::gnp(9, 0.5, rng);
        const SolveResult base = solve(g, INF, small_c(4));
        SolverConfig strict = small_c(4);
        strict.strict_paper = true;
        // strict mode has no pruning, so stay in decision mode
        CHECK(solve(g, base.outcome.cost, strict).outcome.cost == base.outcome.cost);
        if (base.outcome.cost > 0) CHECK_FALSE(solve(g, base.outcome.cost - 1, strict).outcome.feasible());
        SolverConfig par = small_c(4);
        par.parallel = true;
        const SolveResult p = solve(g, base.outcome.cost, par);
        const SolveResult s = solve(g, base.outcome.cost, small_c(4));
        CHECK(p.outcome.cost == s.outcome.cost);
        CHECK(p.outcome.solution == s.outcome.solution);
    }
}

TEST_CASE("leaf count stays under the bound") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const WeightedGraph g = oracle::gnp(10, 0.5, rng);
        const Cost opt = brute_solve(g, INF).cost;
        const SolveResult r = solve(g, opt, small_c(4));
        const double bound = g.size() * std::pow(r.stats.worst_factor, static_cast<double>(opt));
        CHECK(static_cast<double>(r.stats.recursion_leaves) <= bound);
    }
}

TEST_CASE("config validation") {
    SolverConfig cfg;
    cfg.C = 3;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg = {};
    cfg.c = 2;
    CHECK_THROWS_AS(solve(oracle::path(4), 1, cfg), InputError);
    cfg = {};
    cfg.epsilon = 0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg = {};
    cfg.budget = 0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
}
