#include "cograph/modular.hpp"

#include <algorithm>
#include <limits>

namespace cograph {

const char* to_string(DecompKind k) {
    switch (k) {
        case DecompKind::Parallel: return "parallel";
        case DecompKind::Series: return "series";
        case DecompKind::Prime: return "prime";
    }
    return "?";
}

bool is_module(const WeightedGraph& g, const VertexSet& s) {
    if (static_cast<int>(s.size()) != g.size()) throw InputError("vertex set universe does not match graph");
    if (s.none()) throw InputError("empty vertex set is not a module candidate");
    for (Vertex x = 0; x < g.size(); ++x) {
        if (s.test(static_cast<std::size_t>(x))) continue;
        const VertexSet inside = g.neighbors(x) & s;
        if (inside.any() && inside != s) return false;
    }
    return true;
}

bool is_module(const WeightedGraph& g, std::span<const Vertex> s) { return is_module(g, make_set(g.size(), s)); }

VertexSet module_closure(const WeightedGraph& g, Vertex u, Vertex v) {
    const int n = g.size();
    VertexSet s(static_cast<std::size_t>(n));
    s.set(static_cast<std::size_t>(u));
    s.set(static_cast<std::size_t>(v));
    // add splitters until none is left
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex x = 0; x < n; ++x) {
            if (s.test(static_cast<std::size_t>(x))) continue;
            const VertexSet inside = g.neighbors(x) & s;
            if (inside.any() && inside != s) {
                s.set(static_cast<std::size_t>(x));
                grew = true;
            }
        }
    }
    return s;
}

bool is_prime(const WeightedGraph& g) {
    const int n = g.size();
    if (n <= 2) return true;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!module_closure(g, u, v).all()) return false;
    return true;
}

WeightedGraph quotient_graph(const WeightedGraph& g, const ModularPartition& p) {
    std::vector<Weight> w;
    w.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        Cost sum = 0;
        for (Vertex v : b) sum = checked_add(sum, g.weight(v));
        if (sum > static_cast<Cost>(std::numeric_limits<Weight>::max()))
            throw std::overflow_error("module weight exceeds weight range");
        w.push_back(static_cast<Weight>(sum));
    }
    const int k = static_cast<int>(p.blocks.size());
    WeightedGraph q(k, std::move(w));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(p.blocks[static_cast<std::size_t>(i)].front(), p.blocks[static_cast<std::size_t>(j)].front()))
                q.add_edge(i, j);
    return q;
}

namespace {

ModularPartition strong_modules_prime_case(const WeightedGraph& g) {
    // With G and its complement connected, the maximal proper module through v
    // is unique and is the union of all proper closures M(v, w).
    const int n = g.size();
    ModularPartition p;
    VertexSet left = g.all_vertices();
    while (left.any()) {
        const auto v = static_cast<Vertex>(left.find_first());
        VertexSet block(static_cast<std::size_t>(n));
        block.set(static_cast<std::size_t>(v));
        for (Vertex w = 0; w < n; ++w) {
            if (w == v || block.test(static_cast<std::size_t>(w))) continue;
            VertexSet m = module_closure(g, v, w);
            if (!m.all()) block |= m;
        }
        left -= block;
        p.blocks.push_back(to_vector(block));
    }
    return p;
}

}  // namespace

DecompositionResult modular_decomposition(const WeightedGraph& g) {
    if (g.empty()) throw InputError("modular decomposition of the empty graph");
    DecompositionResult r;
    auto comps = components(g);
    if (comps.size() > 1) {
        r.kind = DecompKind::Parallel;
        r.partition.blocks = std::move(comps);
    } else if (auto co = co_components(g); co.size() > 1) {
        r.kind = DecompKind::Series;
        r.partition.blocks = std::move(co);
    } else {
        r.kind = DecompKind::Prime;
        r.partition = strong_modules_prime_case(g);
    }
    std::sort(r.partition.blocks.begin(), r.partition.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    r.quotient = quotient_graph(g, r.partition);
    return r;
}

std::vector<Pair> extend(const WeightedGraph& g, const ModularPartition& p, std::span<const Pair> quotient_pairs) {
    const int k = static_cast<int>(p.blocks.size());
    std::vector<Pair> out;
    for (auto [a, b] : quotient_pairs) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) throw InputError("quotient pair references unknown block");
        for (Vertex x : p.blocks[static_cast<std::size_t>(a)])
            for (Vertex y : p.blocks[static_cast<std::size_t>(b)]) {
                if (x >= g.size() || y >= g.size()) throw InputError("partition does not match graph");
                out.push_back(make_pair_sorted(x, y));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cograph
