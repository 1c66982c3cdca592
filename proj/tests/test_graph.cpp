#include <doctest.h>

#include <random>

#include "cograph/graph.hpp"
#include "oracle.hpp"

using namespace cograph;

TEST_CASE("weights and pair weights") {
    WeightedGraph g(3, {2, 3, 5});
    CHECK(g.pair_weight(0, 1) == 6);
    CHECK(g.pair_weight(1, 2) == 15);
    CHECK_THROWS_AS(g.set_weight(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 7), InputError);
}

TEST_CASE("checked arithmetic overflows loudly") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS(checked_add(INT64_MAX, 1));
    CHECK_THROWS(checked_mul(INT64_MAX / 2 + 1, 2));
    // (2^32-1)^2 does not fit in 63 bits; 2^31 * 2^31 does
    WeightedGraph big(2, {UINT32_MAX, UINT32_MAX});
    CHECK_THROWS(big.pair_weight(0, 1));
    WeightedGraph ok(2, {1U << 31, 1U << 31});
    CHECK(ok.pair_weight(0, 1) == Cost{1} << 62);
}

TEST_CASE("induced subgraphs") {
    const WeightedGraph c5 = oracle::cycle(5);
    const std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(induced_subgraph(c5, std::span<const Vertex>(all)) == c5);
    const std::vector<Vertex> four{0, 1, 2, 3};
    CHECK(induced_subgraph(c5, std::span<const Vertex>(four)) == oracle::path(4));
    WeightedGraph k4(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
    const std::vector<Vertex> three{0, 2, 3};
    const WeightedGraph k3 = induced_subgraph(k4, std::span<const Vertex>(three));
    CHECK(k3.size() == 3);
    CHECK(k3.edge_count() == 3);
    const std::vector<Vertex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(c5, std::span<const Vertex>(bad)), InputError);
}

TEST_CASE("complement") {
    const WeightedGraph p4 = oracle::path(4);  // a-b-c-d
    const WeightedGraph cp = complement(p4);
    // b-d-a-c
    CHECK(cp.adjacent(1, 3));
    CHECK(cp.adjacent(3, 0));
    CHECK(cp.adjacent(0, 2));
    CHECK(cp.edge_count() == 3);
    CHECK(complement(cp) == p4);
    const WeightedGraph c4 = oracle::cycle(4);
    const WeightedGraph twok2 = complement(c4);
    CHECK(twok2.edge_count() == 2);
    CHECK(twok2.adjacent(0, 2));
    CHECK(twok2.adjacent(1, 3));
}

TEST_CASE("find_p4 on small named graphs") {
    const auto w = find_p4(oracle::path(4));
    REQUIRE(w);
    CHECK(is_induced_p4(oracle::path(4), w->path[0], w->path[1], w->path[2], w->path[3]));
    WeightedGraph k5(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.add_edge(a, b);
    CHECK_FALSE(find_p4(k5));
    CHECK_FALSE(find_p4(WeightedGraph(5)));
    const auto c5 = find_p4(oracle::cycle(5));
    REQUIRE(c5);
    CHECK(is_induced_p4(oracle::cycle(5), c5->path[0], c5->path[1], c5->path[2], c5->path[3]));
}

TEST_CASE("find_p4 agrees with the 4-subset scan") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 3000; ++it) {
        const int n = 1 + it % 10;
        const WeightedGraph g = oracle::gnp(n, 0.15 + 0.1 * (it % 8), rng);
        const auto w = find_p4(g);
        REQUIRE(w.has_value() == oracle::has_p4(g));
        if (w) REQUIRE(is_induced_p4(g, w->path[0], w->path[1], w->path[2], w->path[3]));
    }
}

TEST_CASE("P4-freeness is closed under complement") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        const WeightedGraph g = oracle::gnp(1 + it % 8, 0.5, rng);
        REQUIRE(is_cograph(g) == is_cograph(complement(g)));
    }
}

TEST_CASE("induced subgraph commutes with complement") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 500; ++it) {
        const WeightedGraph g = oracle::gnp(8, 0.5, rng);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 8; ++v)
            if (rng() % 2) s.push_back(v);
        REQUIRE(complement(induced_subgraph(g, std::span<const Vertex>(s))) ==
                induced_subgraph(complement(g), std::span<const Vertex>(s)));
    }
}

TEST_CASE("connectivity and co-connectivity") {
    CHECK(is_connected(oracle::path(4)));
    CHECK(is_co_connected(oracle::path(4)));
    const WeightedGraph twok2 = oracle::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(twok2));
    CHECK(is_co_connected(twok2));
    const WeightedGraph k3 = oracle::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_connected(k3));
    CHECK_FALSE(is_co_connected(k3));
    CHECK(is_connected(WeightedGraph(0)));
    CHECK(components(twok2).size() == 2);
    CHECK(co_components(k3).size() == 3);
}

TEST_CASE("path graph recognition") {
    const auto order = as_path_graph(oracle::from_edges(4, {{2, 0}, {0, 3}, {3, 1}}));
    REQUIRE(order);
    CHECK(*order == std::vector<Vertex>{1, 3, 0, 2});
    CHECK_FALSE(as_path_graph(oracle::cycle(5)));
    CHECK_FALSE(as_path_graph(oracle::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(as_path_graph(WeightedGraph(1)));
}
