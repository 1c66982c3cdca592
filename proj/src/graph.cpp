#include "cograph/graph.hpp"

#include <algorithm>
#include <limits>

namespace cograph {

Cost checked_add(Cost a, Cost b) {
    Cost r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cost overflow in addition");
    return r;
}

Cost checked_mul(Cost a, Cost b) {
    Cost r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cost overflow in multiplication");
    return r;
}

WeightedGraph::WeightedGraph(int n) : WeightedGraph(n, std::vector<Weight>(static_cast<std::size_t>(std::max(n, 0)), 1)) {}

WeightedGraph::WeightedGraph(int n, std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (n < 0) throw InputError("negative vertex count");
    if (weights_.size() != static_cast<std::size_t>(n)) throw InputError("weight vector size does not match vertex count");
    for (Weight w : weights_)
        if (w < 1) throw InputError("vertex weights must be positive");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void WeightedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= size()) throw InputError("unknown vertex id " + std::to_string(v));
}

void WeightedGraph::check_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-pair " + std::to_string(u));
}

void WeightedGraph::set_weight(Vertex v, Weight w) {
    check_vertex(v);
    if (w < 1) throw InputError("vertex weights must be positive");
    weights_[static_cast<std::size_t>(v)] = w;
}

Cost WeightedGraph::pair_weight(Vertex u, Vertex v) const {
    return checked_mul(static_cast<Cost>(weight(u)), static_cast<Cost>(weight(v)));
}

int WeightedGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return static_cast<int>(twice / 2);
}

void WeightedGraph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

void WeightedGraph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
}

void WeightedGraph::toggle(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)].flip(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].flip(static_cast<std::size_t>(u));
}

std::vector<std::pair<Vertex, Vertex>> WeightedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u) {
        const auto& row = adj_[static_cast<std::size_t>(u)];
        for (auto v = row.find_next(static_cast<std::size_t>(u)); v != VertexSet::npos; v = row.find_next(v))
            out.emplace_back(u, static_cast<Vertex>(v));
    }
    return out;
}

VertexSet WeightedGraph::all_vertices() const {
    VertexSet s(static_cast<std::size_t>(size()));
    s.set();
    return s;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet make_set(int n, std::span<const Vertex> members) {
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : members) {
        if (v < 0 || v >= n) throw InputError("unknown vertex id " + std::to_string(v));
        s.set(static_cast<std::size_t>(v));
    }
    return s;
}

bool is_induced_p4(const WeightedGraph& g, Vertex w, Vertex x, Vertex y, Vertex z) {
    return g.adjacent(w, x) && g.adjacent(x, y) && g.adjacent(y, z) && !g.adjacent(w, y) && !g.adjacent(w, z) &&
           !g.adjacent(x, z);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
    if (static_cast<int>(s.size()) != g.size()) throw InputError("vertex set universe does not match graph");
    return induced_subgraph(g, to_vector(s));
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> s) {
    std::vector<Vertex> order(s.begin(), s.end());
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end()) throw InputError("duplicate vertex in subset");
    std::vector<Weight> w;
    w.reserve(order.size());
    for (Vertex v : order) {
        if (v < 0 || v >= g.size()) throw InputError("unknown vertex id " + std::to_string(v));
        w.push_back(g.weight(v));
    }
    const int k = static_cast<int>(order.size());
    WeightedGraph h(k, std::move(w));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) h.add_edge(i, j);
    return h;
}

WeightedGraph complement(const WeightedGraph& g) {
    WeightedGraph h(g.size(), g.weights());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

std::optional<P4Witness> find_p4(const WeightedGraph& g) {
    // Every induced P4 has a middle edge xy with a private neighbour on each side.
    const int n = g.size();
    for (Vertex x = 0; x < n; ++x) {
        const VertexSet& nx = g.neighbors(x);
        for (auto yy = nx.find_first(); yy != VertexSet::npos; yy = nx.find_next(yy)) {
            const auto y = static_cast<Vertex>(yy);
            const VertexSet& ny = g.neighbors(y);
            VertexSet left = nx - ny;
            left.reset(yy);
            if (left.none()) continue;
            VertexSet right = ny - nx;
            right.reset(static_cast<std::size_t>(x));
            if (right.none()) continue;
            for (auto w = left.find_first(); w != VertexSet::npos; w = left.find_next(w)) {
                VertexSet far = right - g.neighbors(static_cast<Vertex>(w));
                if (auto z = far.find_first(); z != VertexSet::npos)
                    return P4Witness{{static_cast<Vertex>(w), x, y, static_cast<Vertex>(z)}};
            }
        }
    }
    return std::nullopt;
}

namespace {

template <typename Adjacent>
std::vector<std::vector<Vertex>> components_by(int n, Adjacent&& adjacent_set) {
    std::vector<std::vector<Vertex>> out;
    VertexSet unseen(static_cast<std::size_t>(n));
    unseen.set();
    while (unseen.any()) {
        const auto start = unseen.find_first();
        VertexSet comp(static_cast<std::size_t>(n));
        VertexSet frontier(static_cast<std::size_t>(n));
        frontier.set(start);
        unseen.reset(start);
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(static_cast<std::size_t>(n));
            for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
                next |= adjacent_set(static_cast<Vertex>(v)) & unseen;
            unseen -= next;
            frontier = std::move(next);
        }
        out.push_back(to_vector(comp));
    }
    return out;
}

}  // namespace

std::vector<std::vector<Vertex>> components(const WeightedGraph& g) {
    return components_by(g.size(), [&](Vertex v) -> const VertexSet& { return g.neighbors(v); });
}

std::vector<std::vector<Vertex>> co_components(const WeightedGraph& g) {
    return components_by(g.size(), [&](Vertex v) {
        VertexSet non = ~g.neighbors(v);
        non.reset(static_cast<std::size_t>(v));
        return non;
    });
}

bool is_connected(const WeightedGraph& g) { return g.size() <= 1 || components(g).size() == 1; }

bool is_co_connected(const WeightedGraph& g) { return g.size() <= 1 || co_components(g).size() == 1; }

std::optional<std::vector<Vertex>> as_path_graph(const WeightedGraph& g) {
    const int n = g.size();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<Vertex>{0};
    if (g.edge_count() != n - 1) return std::nullopt;
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 0 || d > 2) return std::nullopt;
        if (d == 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<Vertex> order{start};
    Vertex prev = -1, cur = start;
    while (true) {
        Vertex next = -1;
        const VertexSet& nb = g.neighbors(cur);
        for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
            if (static_cast<Vertex>(v) != prev) next = static_cast<Vertex>(v);
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

}  // namespace cograph
