#pragma once

#include <span>
#include <vector>

#include "cograph/editing.hpp"
#include "cograph/graph.hpp"

namespace cograph {

enum class DecompKind { Parallel, Series, Prime };

const char* to_string(DecompKind k);

struct ModularPartition {
    // Each block sorted; blocks ordered by smallest member.
    std::vector<std::vector<Vertex>> blocks;
};

struct DecompositionResult {
    ModularPartition partition;
    WeightedGraph quotient;  // vertex i stands for partition.blocks[i]
    DecompKind kind = DecompKind::Prime;
};

bool is_module(const WeightedGraph& g, const VertexSet& s);
bool is_module(const WeightedGraph& g, std::span<const Vertex> s);

// Smallest module containing both u and v.
VertexSet module_closure(const WeightedGraph& g, Vertex u, Vertex v);

bool is_prime(const WeightedGraph& g);

DecompositionResult modular_decomposition(const WeightedGraph& g);

// Representative-vertex quotient; weights are block sums.
WeightedGraph quotient_graph(const WeightedGraph& g, const ModularPartition& p);

// Blows quotient pairs up to all pairs between the two blocks.
std::vector<Pair> extend(const WeightedGraph& g, const ModularPartition& p, std::span<const Pair> quotient_pairs);

}  // namespace cograph
