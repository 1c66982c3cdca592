#include "cograph/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "cograph/modular.hpp"

namespace cograph {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr std::array<FamilyName, 13> kNames{{
    {Family::SubdividedStar, "SubdividedStar"},
    {Family::CoSubdividedStar, "CoSubdividedStar"},
    {Family::LineK2c, "LineK2c"},
    {Family::CoLineK2c, "CoLineK2c"},
    {Family::ThinSpider, "ThinSpider"},
    {Family::ThickSpider, "ThickSpider"},
    {Family::HalfGraph, "HalfGraph"},
    {Family::CoHalfGraph, "CoHalfGraph"},
    {Family::HPrime, "HPrime"},
    {Family::CoHPrime, "CoHPrime"},
    {Family::HStar, "HStar"},
    {Family::CoHStar, "CoHStar"},
    {Family::Chain, "Chain"},
}};

}  // namespace

const char* to_string(Family f) {
    for (const auto& e : kNames)
        if (e.family == f) return e.name;
    return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
    for (const auto& e : kNames)
        if (s == e.name) return e.family;
    return std::nullopt;
}

const std::vector<Family>& specific_families() {
    static const std::vector<Family> order{
        Family::SubdividedStar, Family::CoSubdividedStar, Family::LineK2c, Family::CoLineK2c,
        Family::ThinSpider,     Family::ThickSpider,      Family::HalfGraph, Family::CoHalfGraph,
        Family::HPrime,         Family::CoHPrime,         Family::HStar,     Family::CoHStar,
    };
    return order;
}

bool has_center(Family f) {
    switch (f) {
        case Family::SubdividedStar:
        case Family::CoSubdividedStar:
        case Family::HPrime:
        case Family::CoHPrime:
        case Family::HStar:
        case Family::CoHStar: return true;
        default: return false;
    }
}

int pattern_size(Family f, int c) { return (has_center(f) ? 1 : 0) + 2 * c; }

WeightedGraph family_pattern(Family f, int c) {
    if (f == Family::Chain) throw InputError("chains have no fixed pattern; use generate_chain");
    if (c < 3) throw InputError("family size parameter must be at least 3");
    WeightedGraph g(pattern_size(f, c));
    auto V = [&](int i) { return role_v(f, i); };
    auto W = [&](int i) { return role_w(f, c, i); };
    auto clique_v = [&] {
        for (int i = 1; i <= c; ++i)
            for (int j = i + 1; j <= c; ++j) g.add_edge(V(i), V(j));
    };
    auto clique_w = [&] {
        for (int i = 1; i <= c; ++i)
            for (int j = i + 1; j <= c; ++j) g.add_edge(W(i), W(j));
    };
    auto cross = [&](auto&& rel) {
        for (int i = 1; i <= c; ++i)
            for (int j = 1; j <= c; ++j)
                if (rel(i, j)) g.add_edge(V(i), W(j));
    };
    switch (f) {
        case Family::SubdividedStar:
            for (int i = 1; i <= c; ++i) g.add_edge(role_u(), V(i));
            cross([](int i, int j) { return i == j; });
            break;
        case Family::CoSubdividedStar:
            for (int i = 1; i <= c; ++i) g.add_edge(role_u(), V(i));
            clique_v();
            clique_w();
            cross([](int i, int j) { return i != j; });
            break;
        case Family::LineK2c:
            clique_v();
            clique_w();
            cross([](int i, int j) { return i == j; });
            break;
        case Family::CoLineK2c: cross([](int i, int j) { return i != j; }); break;
        case Family::ThinSpider:
            clique_w();
            cross([](int i, int j) { return i == j; });
            break;
        case Family::ThickSpider:
            clique_w();
            cross([](int i, int j) { return i != j; });
            break;
        case Family::HalfGraph: cross([](int i, int j) { return i <= j; }); break;
        case Family::CoHalfGraph:
            clique_v();
            clique_w();
            cross([](int i, int j) { return i > j; });
            break;
        case Family::HPrime:
        case Family::CoHPrime:
            clique_w();
            cross([](int i, int j) { return i <= j; });
            for (int i = 1; i <= c; ++i) g.add_edge(role_u(), V(i));
            if (f == Family::CoHPrime) g = complement(g);
            break;
        case Family::HStar:
        case Family::CoHStar:
            clique_w();
            cross([](int i, int j) { return i <= j; });
            g.add_edge(role_u(), V(1));
            if (f == Family::CoHStar) g = complement(g);
            break;
        case Family::Chain: break;
    }
    return g;
}

std::optional<std::string> encode_chain(const WeightedGraph& g, const std::vector<Vertex>& order) {
    const std::size_t m = order.size();
    if (m == 0) return std::string{};
    for (Vertex v : order)
        if (v < 0 || v >= g.size()) throw InputError("unknown vertex id " + std::to_string(v));
    std::string code(m, '1');
    for (std::size_t i = 1; i < m; ++i) {
        const bool to_prev = g.adjacent(order[i], order[i - 1]);
        for (std::size_t j = 0; j + 1 < i; ++j)
            if (g.adjacent(order[i], order[j]) == to_prev) return std::nullopt;
        if (order[i] == order[i - 1]) return std::nullopt;
        code[i] = to_prev ? '1' : '0';
    }
    if (m >= 2) code[0] = code[1];
    return code;
}

bool verify_chain(const WeightedGraph& g, const ChainDescriptor& ch) {
    if (ch.vertices.size() != ch.code.size()) return false;
    std::vector<Vertex> sorted = ch.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : sorted)
        if (v < 0 || v >= g.size()) return false;
    auto code = encode_chain(g, ch.vertices);
    if (!code) return false;
    return code->size() < 2 || code->substr(1) == ch.code.substr(1);
}

ChainDescriptor chain_slice(const ChainDescriptor& ch, std::size_t begin, std::size_t length) {
    if (begin + length > ch.vertices.size()) throw InputError("chain slice out of range");
    ChainDescriptor out;
    out.vertices.assign(ch.vertices.begin() + static_cast<std::ptrdiff_t>(begin),
                        ch.vertices.begin() + static_cast<std::ptrdiff_t>(begin + length));
    out.code = ch.code.substr(begin, length);
    return out;
}

bool verify_witness(const WeightedGraph& g, const Witness& w) {
    if (w.family == Family::Chain) {
        ChainDescriptor ch{w.embedding, w.code};
        return static_cast<int>(w.embedding.size()) == w.c && verify_chain(g, ch);
    }
    if (w.c < 3) return false;
    const WeightedGraph p = family_pattern(w.family, w.c);
    if (static_cast<int>(w.embedding.size()) != p.size()) return false;
    std::vector<Vertex> sorted = w.embedding;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : sorted)
        if (v < 0 || v >= g.size()) return false;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (g.adjacent(w.embedding[static_cast<std::size_t>(i)], w.embedding[static_cast<std::size_t>(j)]) !=
                p.adjacent(i, j))
                return false;
    return true;
}

GeneratedFamily generate_family(Family f, int c) {
    GeneratedFamily out;
    out.graph = family_pattern(f, c);
    out.witness.family = f;
    out.witness.c = c;
    for (int i = 0; i < out.graph.size(); ++i) out.witness.embedding.push_back(i);
    return out;
}

GeneratedFamily generate_chain(const std::string& code) {
    const int m = static_cast<int>(code.size());
    for (char ch : code)
        if (ch != '0' && ch != '1') throw InputError("chain code must be binary");
    GeneratedFamily out;
    out.graph = WeightedGraph(m);
    for (int i = 1; i < m; ++i) {
        if (code[static_cast<std::size_t>(i)] == '1') {
            out.graph.add_edge(i, i - 1);
        } else {
            for (int j = 0; j + 1 < i; ++j) out.graph.add_edge(i, j);
        }
    }
    out.witness.family = Family::Chain;
    out.witness.c = m;
    for (int i = 0; i < m; ++i) out.witness.embedding.push_back(i);
    out.witness.code = code;
    if (m >= 2) out.witness.code[0] = out.witness.code[1];
    return out;
}

PatternResult classify_binary_pattern(const std::string& b) {
    const std::size_t d = b.size();
    if (d < 6 || d % 3 != 0) throw InputError("pattern length must be a multiple of 3 and at least 6");
    for (char ch : b)
        if (ch != '0' && ch != '1') throw InputError("pattern must be binary");
    auto run_from = [&](std::size_t p) {
        std::size_t q = p;
        while (q < d && b[q] == b[p]) ++q;
        return q - p;
    };
    auto all_zero_from = [&](std::size_t p) { return b.find('1', p) == std::string::npos; };
    auto occurs = [](const char* pat, std::size_t pos) {
        PatternResult r;
        r.kind = PatternResult::Kind::Occurs;
        r.pattern = pat;
        r.position = pos;
        r.length = r.pattern.size();
        return r;
    };

    // 0-based from here on; the first 2d/3 - 1 positions are [0, 2d/3 - 2].
    const std::size_t window = 2 * d / 3 - 1;
    const std::size_t j = b.find('0');
    if (j == std::string::npos || j >= window) return {PatternResult::Kind::Run1, "", 0, run_from(0)};
    if (all_zero_from(j)) return {PatternResult::Kind::Run0, "", j, d - j};
    if (b[j + 1] == '0') {
        // 00 followed somewhere by a 1
        const std::size_t one = b.find('1', j);
        return occurs("001", one - 2);
    }
    if (b[j + 2] == '1') return occurs("011", j);
    if (b[j + 3] == '1') return occurs("0101", j);
    if (all_zero_from(j + 2)) return {PatternResult::Kind::Run0, "", j + 2, d - j - 2};
    const std::size_t one = b.find('1', j + 2);
    return occurs("001", one - 2);
}

ChainDescriptor find_forced_subchain(const ChainDescriptor& ch) {
    const std::size_t n = ch.vertices.size();
    if (n != ch.code.size() || n % 4 != 0 || n < 8) throw InputError("forced subchain needs a chain of 4c >= 8 vertices");
    const std::size_t c = n / 4;
    const PatternResult r = classify_binary_pattern(ch.code.substr(c));
    if (r.kind != PatternResult::Kind::Occurs) return chain_slice(ch, c + r.position, c);
    const std::size_t last = c + r.position + r.length - 1;
    return chain_slice(ch, last + 1 - c, c);
}

namespace {

// Pattern vertices ordered so that each has many already-placed neighbours.
std::vector<int> match_order(const WeightedGraph& p) {
    const int k = p.size();
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int x = 0; x < k; ++x) {
            if (placed[static_cast<std::size_t>(x)]) continue;
            int links = 0;
            for (int y : order) links += p.adjacent(x, y) ? 1 : 0;
            if (links > best_links || (links == best_links && p.degree(x) > best_deg)) {
                best = x;
                best_links = links;
                best_deg = p.degree(x);
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }
    return order;
}

class Matcher {
public:
    Matcher(const WeightedGraph& g, const WeightedGraph& p, SearchBudget& budget)
        : g_(g), p_(p), budget_(budget), order_(match_order(p)),
          image_(static_cast<std::size_t>(p.size()), -1) {}

    std::optional<std::vector<Vertex>> run() {
        if (p_.size() > g_.size()) return std::nullopt;
        VertexSet used(static_cast<std::size_t>(g_.size()));
        if (!extend(0, used)) return std::nullopt;
        return image_;
    }

private:
    bool extend(std::size_t idx, VertexSet& used) {
        if (idx == order_.size()) return true;
        const int pv = order_[idx];
        VertexSet cand = ~used;
        for (std::size_t j = 0; j < idx; ++j) {
            const int q = order_[j];
            const Vertex m = image_[static_cast<std::size_t>(q)];
            if (p_.adjacent(pv, q))
                cand &= g_.neighbors(m);
            else
                cand -= g_.neighbors(m);
        }
        const int k = p_.size();
        const int need_deg = p_.degree(pv);
        const int need_codeg = k - 1 - need_deg;
        for (auto x = cand.find_first(); x != VertexSet::npos; x = cand.find_next(x)) {
            if (!budget_.spend()) return false;
            const auto vx = static_cast<Vertex>(x);
            const int deg = g_.degree(vx);
            if (deg < need_deg || g_.size() - 1 - deg < need_codeg) continue;
            image_[static_cast<std::size_t>(pv)] = vx;
            used.set(x);
            if (extend(idx + 1, used)) return true;
            used.reset(x);
            if (budget_.exhausted()) return false;
        }
        image_[static_cast<std::size_t>(pv)] = -1;
        return false;
    }

    const WeightedGraph& g_;
    const WeightedGraph& p_;
    SearchBudget& budget_;
    std::vector<int> order_;
    std::vector<Vertex> image_;
};

}  // namespace

std::optional<Witness> find_family(const WeightedGraph& g, Family f, int c, SearchBudget& budget) {
    if (f == Family::Chain) throw InputError("use find_long_chain for chains");
    if (pattern_size(f, c) > g.size()) return std::nullopt;
    const WeightedGraph p = family_pattern(f, c);
    Matcher m(g, p, budget);
    auto image = m.run();
    if (!image) return std::nullopt;
    Witness w{f, c, *image, ""};
    if (!verify_witness(g, w)) return std::nullopt;
    return w;
}

ChainDescriptor find_long_chain(const WeightedGraph& g, int target, SearchBudget& budget) {
    const int n = g.size();
    std::vector<Vertex> chain, best;
    VertexSet in_chain(static_cast<std::size_t>(n));
    bool done = false;

    // all_prev / any_prev: intersection / union of neighbourhoods of every
    // chain vertex but the last.
    std::function<void(const VertexSet&, const VertexSet&)> grow = [&](const VertexSet& all_prev,
                                                                       const VertexSet& any_prev) {
        if (chain.size() > best.size()) best = chain;
        if (static_cast<int>(chain.size()) >= target) {
            done = true;
            return;
        }
        const Vertex last = chain.back();
        const VertexSet& nl = g.neighbors(last);
        VertexSet type1 = (nl - any_prev) - in_chain;
        VertexSet type0 = (all_prev - nl) - in_chain;
        const VertexSet next_all = all_prev & nl;
        const VertexSet next_any = any_prev | nl;
        for (const VertexSet* cand : {&type1, &type0}) {
            for (auto x = cand->find_first(); x != VertexSet::npos; x = cand->find_next(x)) {
                if (done || !budget.spend()) return;
                chain.push_back(static_cast<Vertex>(x));
                in_chain.set(x);
                grow(next_all, next_any);
                in_chain.reset(x);
                chain.pop_back();
            }
        }
    };

    VertexSet all(static_cast<std::size_t>(n));
    all.set();
    VertexSet none(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n && !done && !budget.exhausted(); ++s) {
        chain.assign(1, s);
        in_chain.reset();
        in_chain.set(static_cast<std::size_t>(s));
        VertexSet start_all = all;
        start_all.reset(static_cast<std::size_t>(s));
        grow(start_all, none);
    }
    ChainDescriptor out;
    out.vertices = best;
    auto code = encode_chain(g, best);
    out.code = code ? *code : std::string(best.size(), '1');
    return out;
}

std::optional<Witness> find_witness(const WeightedGraph& g, int c, std::int64_t budget) {
    if (c < 3) throw InputError("witness size parameter must be at least 3");
    if (!is_prime(g)) throw InputError("witness search expects a prime graph");
    for (Family f : specific_families()) {
        SearchBudget b{budget};
        if (auto w = find_family(g, f, c, b)) return w;
    }
    SearchBudget b{budget};
    const int target = 12 * c;
    ChainDescriptor ch = find_long_chain(g, target, b);
    if (static_cast<int>(ch.vertices.size()) < target) return std::nullopt;
    ch = chain_slice(ch, 0, static_cast<std::size_t>(target));
    return Witness{Family::Chain, target, ch.vertices, ch.code};
}

}  // namespace cograph
