#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/graph.hpp"

namespace cograph {

enum class Family {
    SubdividedStar,
    CoSubdividedStar,
    LineK2c,
    CoLineK2c,
    ThinSpider,
    ThickSpider,
    HalfGraph,
    CoHalfGraph,
    HPrime,
    CoHPrime,
    HStar,
    CoHStar,
    Chain,
};

const char* to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

// The specific families in detection order (Chain excluded).
const std::vector<Family>& specific_families();

// Families with a centre vertex u in front of v_1..v_c, w_1..w_c.
bool has_center(Family f);
int pattern_size(Family f, int c);

// Canonical labelled pattern: u (if any) = 0, then v_1..v_c, then w_1..w_c.
WeightedGraph family_pattern(Family f, int c);

struct ChainDescriptor {
    std::vector<Vertex> vertices;
    std::string code;  // code[0] is free; code[i] is the type of vertices[i]
    bool operator==(const ChainDescriptor&) const = default;
};

struct Witness {
    Family family = Family::Chain;
    int c = 0;
    std::vector<Vertex> embedding;  // canonical role order; chain order for Chain
    std::string code;               // Chain only
    bool operator==(const Witness&) const = default;
};

// Role index helpers for canonical embeddings (1-based i).
inline int role_u() { return 0; }
inline int role_v(Family f, int i) { return (has_center(f) ? 1 : 0) + i - 1; }
inline int role_w(Family f, int c, int i) { return (has_center(f) ? 1 : 0) + c + i - 1; }

// Type string of `order` as a chain (first character copies the second), or
// nullopt if the vertices do not form a chain.
std::optional<std::string> encode_chain(const WeightedGraph& g, const std::vector<Vertex>& order);
bool verify_chain(const WeightedGraph& g, const ChainDescriptor& ch);
ChainDescriptor chain_slice(const ChainDescriptor& ch, std::size_t begin, std::size_t length);

bool verify_witness(const WeightedGraph& g, const Witness& w);

struct GeneratedFamily {
    WeightedGraph graph;
    Witness witness;
};

GeneratedFamily generate_family(Family f, int c);
// Chain on vertices 0..|code|-1 in order.
GeneratedFamily generate_chain(const std::string& code);

struct PatternResult {
    enum class Kind { Run0, Run1, Occurs } kind = Kind::Run1;
    std::string pattern;      // "0101", "001" or "011" when Occurs
    std::size_t position = 0;  // 0-based start
    std::size_t length = 0;    // run length or pattern length
};

PatternResult classify_binary_pattern(const std::string& b);

// From a chain of 4c vertices, a slice of c vertices that is all-0, all-1, or
// ends with 0101, 001 or 011.
ChainDescriptor find_forced_subchain(const ChainDescriptor& ch);

struct SearchBudget {
    std::int64_t nodes = 20000;
    std::int64_t used = 0;
    bool spend() { return ++used <= nodes; }
    bool exhausted() const { return used > nodes; }
};

// Induced copy of the family pattern, or nullopt (including budget expiry).
std::optional<Witness> find_family(const WeightedGraph& g, Family f, int c, SearchBudget& budget);

// Longest chain found by budgeted extension, stopping early at `target`.
ChainDescriptor find_long_chain(const WeightedGraph& g, int target, SearchBudget& budget);

// Specific families first, then a chain of 12c vertices. Throws on
// non-prime input.
std::optional<Witness> find_witness(const WeightedGraph& g, int c, std::int64_t budget);

}  // namespace cograph
