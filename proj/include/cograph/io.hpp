#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cograph/editing.hpp"
#include "cograph/graph.hpp"

namespace cograph {

// Graph text format:
//   # comment
//   v <label> <weight>     weight defaults to 1
//   e <label> <label>
// Labels get dense ids in order of first appearance.
struct LabeledGraph {
    WeightedGraph graph;
    std::vector<std::string> labels;

    std::optional<Vertex> id(const std::string& label) const;
};

LabeledGraph parse_graph(std::istream& in);
LabeledGraph parse_graph_text(const std::string& text);
LabeledGraph read_graph_file(const std::string& path);
std::string serialize_graph(const LabeledGraph& g);

// Solution files: the JSON that `solve --json` prints, or text with lines
// "status <s>", "cost <n>", "d <label> <label>" and '#' comments.
struct SolutionFile {
    std::optional<std::string> status;
    std::optional<Cost> cost;
    std::vector<std::pair<std::string, std::string>> deletions;
};

SolutionFile parse_solution_text(const std::string& text);
SolutionFile read_solution_file(const std::string& path);

struct VerifyReport {
    bool ok = false;
    Cost cost = 0;
    std::string message;
};

VerifyReport verify_solution(const LabeledGraph& g, const SolutionFile& s);

}  // namespace cograph
