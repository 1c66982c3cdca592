#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cograph/editing.hpp"
#include "cograph/graph.hpp"
#include "cograph/rules.hpp"

namespace cograph {

struct SolverConfig {
    int C = 12;  // brute-force threshold on vertex count
    int c = 4;   // witness size parameter
    double epsilon = 1.0;
    std::int64_t budget = 20000;  // witness search nodes, per search
    bool enable_peeling = true;
    bool parallel = false;
    // Same k on every factor and no incumbent pruning, as in the plain recursion.
    bool strict_paper = false;

    void validate() const;
};

struct RunStats {
    std::uint64_t recursion_nodes = 0;
    std::uint64_t recursion_leaves = 0;
    int max_depth = 0;
    std::map<std::string, std::uint64_t> witnesses_found;  // by family, "chain" for chains
    std::map<std::string, std::uint64_t> rules_fired;      // by provenance
    std::uint64_t fallbacks_taken = 0;
    std::uint64_t exact_paths = 0;
    std::uint64_t peeled_components = 0;
    // rules whose factor exceeds 2+epsilon although c is large enough
    std::uint64_t factor_violations = 0;
    double worst_factor = 1.0;  // over fired rules, as used for the leaf bound
    std::string worst_rule;

    void merge(const RunStats& o);
};

struct SolveResult {
    SolveOutcome outcome;
    RunStats stats;
};

// k == INF means optimization mode (k becomes the total edge cost).
SolveResult solve(const WeightedGraph& g, Cost k, const SolverConfig& cfg = {});

using Selection = std::variant<RuleSet, ExactPath>;

// Branching rule for a prime, non-cograph quotient. Fills stats when given.
Selection select_rule(const WeightedGraph& q, const SolverConfig& cfg, RunStats* stats = nullptr);

struct PeelResult {
    WeightedGraph rest;
    std::vector<Vertex> kept;  // rest vertex i is kept[i] of the input
    Cost cost = 0;
    std::vector<Pair> deletions;
    int components = 0;
};

// Solves every path component on >= 4 vertices exactly and drops it.
PeelResult peel_path_components(const WeightedGraph& g);

}  // namespace cograph
