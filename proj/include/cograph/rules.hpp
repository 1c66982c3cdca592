#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cograph/branching.hpp"
#include "cograph/editing.hpp"
#include "cograph/graph.hpp"
#include "cograph/witness.hpp"

namespace cograph {

// One base set plus independent binary choices; stands for 2^|choices| sets,
// materialized on demand so that (c-1)^{2^{c-1}} rules stay O(c) in memory.
struct SetFamily {
    std::vector<Pair> base;
    std::vector<std::array<Pair, 2>> choices;

    std::uint64_t count() const { return std::uint64_t{1} << choices.size(); }
    std::vector<Pair> materialize(std::uint64_t index) const;
};

struct RuleSet {
    std::vector<SetFamily> families;
    BranchingVector claimed;
    std::string provenance;
    // Lower bound on extra cost the driver pays on the path piece each branch
    // cuts loose (degree-two runs only).
    Cost peel_credit = 0;

    std::uint64_t size() const;
    EditingSet set(std::uint64_t index) const;
    std::vector<EditingSet> materialize_all() const;
    // claimed with peel_credit added to every entry
    BranchingVector effective() const;
};

struct ExactPath {
    Cost cost = 0;
    std::vector<Pair> deletions;
};

using PathOutcome = std::variant<std::monostate, RuleSet, ExactPath>;

struct PathContext {
    std::vector<Vertex> path;      // x_1..x_L, an induced path
    VertexSet outside_neighbors;   // N(P)
    VertexSet U;                   // members of N(P) with a non-neighbour on P
    std::vector<char> light;       // per path vertex: no neighbour outside P
};

// Throws InputError unless `path` is an induced path of g.
PathContext make_path_context(const WeightedGraph& g, std::vector<Vertex> path);

// Closes D under forcing: a P4 of G - D whose edges other than e all lie in
// `conserved` forces e. Sound for deletion-only solutions avoiding `conserved`.
std::vector<Pair> force_closure(const WeightedGraph& g, std::vector<Pair> deleted, const std::vector<Pair>& conserved);

RuleSet rule_p4_trivial(const WeightedGraph& g, const P4Witness& w);

// Plain four-way branching around x_i x_{i+1} (1-based i, 3 <= i <= L-3).
RuleSet rule_branch_around(const WeightedGraph& g, const PathContext& ctx, int i);
// Same four cases, each closed under forcing.
RuleSet rule_branch_around_forced(const WeightedGraph& g, const PathContext& ctx, int i);

RuleSet rule_fixed(const WeightedGraph& g, const Witness& w);

RuleSet rule_easy_chain(const WeightedGraph& g, const ChainDescriptor& ch);
RuleSet rule_zero_chain(const WeightedGraph& g, const ChainDescriptor& ch);

struct PathRuleConfig {
    int c = 4;
};

// Six cases around p,a,b,c,d,e,f,g = x_t..x_{t+7} (reversed path if asked)
// and a vertex v adjacent to c and d but not e. Empty if v does not exist.
std::optional<RuleSet> rule_two_heavy_detour(const WeightedGraph& g, const PathContext& ctx, int t, bool reversed = false);

PathOutcome rule_path(const WeightedGraph& g, const PathContext& ctx, const PathRuleConfig& cfg = {});

// Exact solution on a path graph.
ExactPath path_dp(const WeightedGraph& g);
// Same on the path `order` inside g (order must be an induced path and a
// connected component of g is not required).
ExactPath path_dp_on(const WeightedGraph& g, const std::vector<Vertex>& order);

}  // namespace cograph
