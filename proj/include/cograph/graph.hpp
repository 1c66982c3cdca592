#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cograph {

using Vertex = int;
using Weight = std::uint32_t;
// Costs and budgets. Products of two weights can exceed the signed range;
// all arithmetic on costs goes through checked_add / checked_mul.
using Cost = std::int64_t;

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Thrown on malformed caller input (bad vertex ids, self-pairs, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Cost checked_add(Cost a, Cost b);
Cost checked_mul(Cost a, Cost b);

// Simple loopless vertex-weighted graph on dense ids 0..n-1.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);
    WeightedGraph(int n, std::vector<Weight> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    bool empty() const { return weights_.empty(); }

    Weight weight(Vertex v) const { return weights_.at(static_cast<std::size_t>(v)); }
    const std::vector<Weight>& weights() const { return weights_; }
    void set_weight(Vertex v, Weight w);

    /// ω(u)·ω(v).
    Cost pair_weight(Vertex u, Vertex v) const;

    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }
    int edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void toggle(Vertex u, Vertex v);

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    VertexSet all_vertices() const;

    bool operator==(const WeightedGraph& other) const = default;

private:
    void check_vertex(Vertex v) const;
    void check_pair(Vertex u, Vertex v) const;

    std::vector<Weight> weights_;
    std::vector<VertexSet> adj_;
};

// An induced P4 w-x-y-z.
struct P4Witness {
    std::array<Vertex, 4> path{};
    bool operator==(const P4Witness&) const = default;
};

bool is_induced_p4(const WeightedGraph& g, Vertex w, Vertex x, Vertex y, Vertex z);

// Vertices of `s` in increasing order become 0..|s|-1 of the result.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> s);
WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

WeightedGraph complement(const WeightedGraph& g);

std::optional<P4Witness> find_p4(const WeightedGraph& g);
inline bool is_cograph(const WeightedGraph& g) { return !find_p4(g).has_value(); }

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const WeightedGraph& g);
std::vector<std::vector<Vertex>> co_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);
bool is_co_connected(const WeightedGraph& g);

// If g is a single induced path on all of its vertices (n >= 1), returns the
// vertex order from the smaller endpoint; otherwise nullopt.
std::optional<std::vector<Vertex>> as_path_graph(const WeightedGraph& g);

std::vector<Vertex> to_vector(const VertexSet& s);
VertexSet make_set(int n, std::span<const Vertex> members);

}  // namespace cograph
