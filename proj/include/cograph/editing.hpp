#pragma once

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cograph/graph.hpp"

namespace cograph {

using Pair = std::pair<Vertex, Vertex>;

inline Pair make_pair_sorted(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

inline constexpr Cost INF = std::numeric_limits<Cost>::max();

// Thrown when an exponential oracle is asked to run on a graph above its cap.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Sigma { Deletion, Insertion, Both };

struct EditingSet {
    std::vector<Pair> pairs;  // sorted, normalized u < v
    Sigma sigma = Sigma::Deletion;

    EditingSet() = default;
    explicit EditingSet(std::vector<Pair> p, Sigma s = Sigma::Deletion);
    bool operator==(const EditingSet&) const = default;
};

// Sorts, normalizes and rejects self-pairs / duplicates.
std::vector<Pair> normalize_pairs(std::vector<Pair> pairs);

Cost cost(const WeightedGraph& g, std::span<const Pair> pairs);
inline Cost cost(const WeightedGraph& g, const EditingSet& e) { return cograph::cost(g, std::span<const Pair>(e.pairs)); }

// True if every pair is an edge (deletion), non-edge (insertion) of g.
bool respects_sigma(const WeightedGraph& g, const EditingSet& e);

WeightedGraph apply_edits(const WeightedGraph& g, std::span<const Pair> pairs);
inline WeightedGraph apply_edits(const WeightedGraph& g, const EditingSet& e) { return apply_edits(g, std::span<const Pair>(e.pairs)); }

struct SolveOutcome {
    Cost cost = INF;
    std::optional<EditingSet> solution;

    bool feasible() const { return cost != INF; }
    static SolveOutcome infeasible() { return {}; }
};

// Exact solver. Candidate sets are explored in nondecreasing cost order, and
// among the cheapest the lexicographically smallest sorted pair list wins.
SolveOutcome brute_solve(const WeightedGraph& g, Cost k, Sigma sigma = Sigma::Deletion);

inline constexpr int kEnumerationCap = 9;

// Every deletion set of cost opt(G) that yields a cograph.
std::vector<EditingSet> enumerate_optimal_deletion_sets(const WeightedGraph& g, int cap = kEnumerationCap);

// Some optimal deletion set contains some member of `sets`.
bool verify_safe(const WeightedGraph& g, std::span<const EditingSet> sets, int cap = kEnumerationCap);

// Same predicate via opt(G - E_i) + cost(E_i) == opt(G); no enumeration, so it
// works on graphs above the enumeration cap.
bool verify_safe_by_cost(const WeightedGraph& g, std::span<const EditingSet> sets);

}  // namespace cograph
