#include "cograph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cograph {

std::optional<Vertex> LabeledGraph::id(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<Vertex>(i);
    return std::nullopt;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

template <class T>
std::optional<T> parse_int(const std::string& s) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
    std::map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<char> weighted;
    std::vector<Pair> edges;
    std::set<Pair> seen;
    auto intern = [&](const std::string& l) {
        auto [it, fresh] = ids.emplace(l, static_cast<Vertex>(labels.size()));
        if (fresh) {
            labels.push_back(l);
            weights.push_back(1);
            weighted.push_back(0);
        }
        return it->second;
    };
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = tokens(line);
        if (t.empty() || t[0][0] == '#') continue;
        if (t[0] == "v") {
            if (t.size() != 2 && t.size() != 3) fail(no, "expected 'v <label> [weight]'");
            Weight w = 1;
            if (t.size() == 3) {
                auto parsed = parse_int<std::uint64_t>(t[2]);
                if (!parsed || *parsed == 0 || *parsed > std::numeric_limits<Weight>::max())
                    fail(no, "weight must be an integer in 1..4294967295");
                w = static_cast<Weight>(*parsed);
            }
            const Vertex v = intern(t[1]);
            if (weighted[static_cast<std::size_t>(v)]) fail(no, "vertex '" + t[1] + "' declared twice");
            weighted[static_cast<std::size_t>(v)] = 1;
            weights[static_cast<std::size_t>(v)] = w;
        } else if (t[0] == "e") {
            if (t.size() != 3) fail(no, "expected 'e <label> <label>'");
            if (t[1] == t[2]) fail(no, "self-loop on '" + t[1] + "'");
            const Vertex a = intern(t[1]), b = intern(t[2]);
            if (!seen.insert(make_pair_sorted(a, b)).second)
                fail(no, "duplicate edge " + t[1] + " " + t[2]);
            edges.emplace_back(a, b);
        } else {
            fail(no, "unknown record '" + t[0] + "'");
        }
    }
    LabeledGraph out;
    out.graph = WeightedGraph(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) out.graph.set_weight(static_cast<Vertex>(i), weights[i]);
    for (auto [a, b] : edges) out.graph.add_edge(a, b);
    out.labels = std::move(labels);
    return out;
}

LabeledGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

LabeledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return parse_graph(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    for (Vertex v = 0; v < g.graph.size(); ++v)
        out << "v " << g.labels[static_cast<std::size_t>(v)] << ' ' << g.graph.weight(v) << '\n';
    for (auto [a, b] : g.graph.edges())
        out << "e " << g.labels[static_cast<std::size_t>(a)] << ' ' << g.labels[static_cast<std::size_t>(b)] << '\n';
    return out.str();
}

SolutionFile parse_solution_text(const std::string& text) {
    SolutionFile s;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("bad solution JSON: ") + e.what());
        }
        try {
            if (j.contains("status")) s.status = j.at("status").get<std::string>();
            if (j.contains("cost") && !j.at("cost").is_null()) s.cost = j.at("cost").get<Cost>();
            if (j.contains("deletions"))
                for (const auto& d : j.at("deletions")) {
                    if (!d.is_array() || d.size() != 2) throw InputError("deletion entries must be pairs");
                    auto label = [](const nlohmann::json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
                    s.deletions.emplace_back(label(d[0]), label(d[1]));
                }
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("bad solution JSON: ") + e.what());
        }
        return s;
    }
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = tokens(line);
        if (t.empty() || t[0][0] == '#') continue;
        if (t[0] == "d" && t.size() == 3) {
            s.deletions.emplace_back(t[1], t[2]);
        } else if (t[0] == "cost" && t.size() == 2) {
            auto c = parse_int<Cost>(t[1]);
            if (!c) fail(no, "bad cost");
            s.cost = *c;
        } else if (t[0] == "status" && t.size() == 2) {
            s.status = t[1];
        } else {
            fail(no, "expected 'd <u> <v>', 'cost <n>' or 'status <s>'");
        }
    }
    return s;
}

SolutionFile read_solution_file(const std::string& path) { return parse_solution_text(slurp(path)); }

VerifyReport verify_solution(const LabeledGraph& g, const SolutionFile& s) {
    VerifyReport r;
    if (s.status && *s.status != "solved") {
        r.message = "solution reports status '" + *s.status + "'";
        return r;
    }
    std::vector<Pair> pairs;
    for (const auto& [a, b] : s.deletions) {
        const auto u = g.id(a), v = g.id(b);
        if (!u || !v) {
            r.message = "unknown vertex in deletion " + a + " " + b;
            return r;
        }
        if (!g.graph.adjacent(*u, *v)) {
            r.message = "deletion " + a + " " + b + " is not an edge";
            return r;
        }
        pairs.push_back(make_pair_sorted(*u, *v));
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
        r.message = "repeated deletion";
        return r;
    }
    r.cost = cost(g.graph, std::span<const Pair>(pairs));
    if (s.cost && *s.cost != r.cost) {
        r.message = "stated cost " + std::to_string(*s.cost) + " but deletions cost " + std::to_string(r.cost);
        return r;
    }
    const WeightedGraph h = apply_edits(g.graph, std::span<const Pair>(pairs));
    if (auto p = find_p4(h)) {
        r.message = "P4 remains:";
        for (Vertex v : p->path) r.message += " " + g.labels[static_cast<std::size_t>(v)];
        return r;
    }
    r.ok = true;
    r.message = "ok";
    return r;
}

}  // namespace cograph
