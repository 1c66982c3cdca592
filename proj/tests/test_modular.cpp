#include <doctest.h>

#include <random>

#include "cograph/editing.hpp"
#include "cograph/modular.hpp"
#include "oracle.hpp"

using namespace cograph;

namespace {

std::vector<std::vector<Vertex>> all_modules(const WeightedGraph& g) {
    std::vector<std::vector<Vertex>> out;
    const int n = g.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1U) s.push_back(v);
        if (oracle::is_module(g, s)) out.push_back(s);
    }
    return out;
}

bool overlap(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    bool common = false, a_only = false, b_only = false;
    for (Vertex v : a) (std::find(b.begin(), b.end(), v) != b.end() ? common : a_only) = true;
    for (Vertex v : b)
        if (std::find(a.begin(), a.end(), v) == a.end()) b_only = true;
    return common && a_only && b_only;
}

}  // namespace

TEST_CASE("module test") {
    const WeightedGraph c4 = oracle::cycle(4);
    const std::vector<Vertex> all{0, 1, 2, 3}, one{2}, opp{0, 2}, adj{0, 1};
    CHECK(is_module(c4, std::span<const Vertex>(all)));
    CHECK(is_module(c4, std::span<const Vertex>(one)));
    CHECK(is_module(c4, std::span<const Vertex>(opp)));
    CHECK_FALSE(is_module(c4, std::span<const Vertex>(adj)));
    CHECK_THROWS_AS(is_module(c4, std::span<const Vertex>()), InputError);
}

TEST_CASE("primality on small graphs") {
    CHECK(is_prime(oracle::path(4)));
    CHECK(is_prime(WeightedGraph(2)));
    CHECK_FALSE(is_prime(WeightedGraph(3)));
    CHECK_FALSE(is_prime(oracle::cycle(4)));
    CHECK(is_prime(oracle::cycle(5)));
}

TEST_CASE("decomposition of named graphs") {
    const DecompositionResult p4 = modular_decomposition(oracle::path(4));
    CHECK(p4.kind == DecompKind::Prime);
    CHECK(p4.partition.blocks.size() == 4);
    CHECK(p4.quotient == oracle::path(4));

    const DecompositionResult twok2 = modular_decomposition(oracle::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(twok2.kind == DecompKind::Parallel);
    CHECK(twok2.partition.blocks == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
    CHECK(twok2.quotient.edge_count() == 0);
    CHECK(twok2.quotient.weights() == std::vector<Weight>{2, 2});

    const DecompositionResult c4 = modular_decomposition(oracle::cycle(4));
    CHECK(c4.kind == DecompKind::Series);
    CHECK(c4.partition.blocks == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
    CHECK(c4.quotient.edge_count() == 1);
    CHECK(c4.quotient.weights() == std::vector<Weight>{2, 2});
}

TEST_CASE("quotient of every connected co-connected graph up to 6 vertices is prime") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
            const WeightedGraph g = oracle::labeled(n, code);
            if (!is_connected(g) || !is_co_connected(g)) continue;
            const DecompositionResult d = modular_decomposition(g);
            REQUIRE(d.kind == DecompKind::Prime);
            REQUIRE(is_prime(d.quotient));
        }
}

TEST_CASE("blocks are strong modules and the quotient matches representatives") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 400; ++it) {
        const WeightedGraph g = oracle::gnp(3 + it % 5, 0.3 + 0.1 * (it % 5), rng);
        const DecompositionResult d = modular_decomposition(g);
        const auto mods = all_modules(g);
        std::vector<Vertex> reps;
        std::size_t covered = 0;
        for (const auto& b : d.partition.blocks) {
            REQUIRE(oracle::is_module(g, b));
            covered += b.size();
            reps.push_back(b.front());
            if (d.kind == DecompKind::Prime)
                for (const auto& m : mods) REQUIRE_FALSE(overlap(b, m));
        }
        REQUIRE(covered == static_cast<std::size_t>(g.size()));
        const WeightedGraph r = induced_subgraph(g, std::span<const Vertex>(reps));
        for (Vertex a = 0; a < r.size(); ++a)
            for (Vertex b = 0; b < r.size(); ++b)
                if (a != b) REQUIRE(r.adjacent(a, b) == d.quotient.adjacent(a, b));
    }
}

TEST_CASE("extension to the full graph") {
    // blocks of sizes 2 and 3, joined
    WeightedGraph g(5);
    for (Vertex a : {0, 1})
        for (Vertex b : {2, 3, 4}) g.add_edge(a, b);
    ModularPartition p{{{0, 1}, {2, 3, 4}}};
    const std::vector<Pair> q{{0, 1}};
    const auto ext = extend(g, p, std::span<const Pair>(q));
    CHECK(ext.size() == 6);
    CHECK(cost(g, std::span<const Pair>(ext)) == 6);
    CHECK(cost(quotient_graph(g, p), std::span<const Pair>(q)) == 6);
    CHECK(extend(g, p, std::span<const Pair>()).empty());

    ModularPartition singles{{{0}, {1}, {2}, {3}, {4}}};
    const std::vector<Pair> some{{0, 2}, {1, 4}};
    CHECK(extend(g, singles, std::span<const Pair>(some)) == some);
    const std::vector<Pair> bad{{0, 7}};
    CHECK_THROWS_AS(extend(g, p, std::span<const Pair>(bad)), InputError);
}

TEST_CASE("extension preserves cost with weights") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        WeightedGraph g = oracle::gnp(7, 0.5, rng);
        for (Vertex v = 0; v < 7; ++v) g.set_weight(v, 1 + static_cast<Weight>(rng() % 3));
        const DecompositionResult d = modular_decomposition(g);
        const WeightedGraph& q = d.quotient;
        const auto qe = q.edges();
        const std::vector<Pair> qs(qe.begin(), qe.end());
        const auto ext = extend(g, d.partition, std::span<const Pair>(qs));
        REQUIRE(cost(g, std::span<const Pair>(ext)) == cost(q, std::span<const Pair>(qs)));
    }
}
