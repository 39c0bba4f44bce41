#include "hadwiger/detect.hpp"

#include "hadwiger/invariants.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hadwiger {

std::string to_string(PatternKind k)
{
    switch (k) {
    case PatternKind::C5: return "C5";
    case PatternKind::W5: return "W5";
    case PatternKind::CoStar5: return "CO_STAR_5";
    case PatternKind::Independent3: return "INDEPENDENT_3";
    case PatternKind::Custom: return "custom";
    }
    return "custom";
}

PatternKind pattern_kind_from_string(const std::string& s)
{
    for (auto k : {PatternKind::C5, PatternKind::W5, PatternKind::CoStar5, PatternKind::Independent3, PatternKind::Custom})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown pattern kind '" + s + "'");
}

const Graph& pattern_graph(PatternKind kind)
{
    static const Graph c5 = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    static const Graph w5 = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    static const Graph co_star =
        Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    static const Graph independent3 = Graph(3);
    switch (kind) {
    case PatternKind::C5: return c5;
    case PatternKind::W5: return w5;
    case PatternKind::CoStar5: return co_star;
    case PatternKind::Independent3: return independent3;
    case PatternKind::Custom: break;
    }
    throw std::invalid_argument("custom patterns have no built-in graph");
}

PatternWitness make_witness(PatternKind kind, std::vector<int> mapping)
{
    return PatternWitness{kind, pattern_graph(kind), std::move(mapping)};
}

bool validate_pattern_witness(const Graph& host, const PatternWitness& w)
{
    if (w.kind != PatternKind::Custom && !(w.pattern == pattern_graph(w.kind))) return false;
    int k = w.pattern.order();
    if (static_cast<int>(w.mapping.size()) != k) return false;
    VertexSet seen;
    for (int v : w.mapping) {
        if (v < 0 || v >= host.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (w.pattern.adjacent(i, j) != host.adjacent(w.mapping[static_cast<std::size_t>(i)], w.mapping[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

namespace {

    class InducedSearch {
    public:
        InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern)
        {
            order_.resize(static_cast<std::size_t>(pattern.order()));
            std::iota(order_.begin(), order_.end(), 0);
            std::stable_sort(order_.begin(), order_.end(),
                             [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
            image_.assign(order_.size(), -1);
        }

        std::optional<std::vector<int>> run()
        {
            if (pattern_.order() > host_.order()) return std::nullopt;
            if (extend(0, VertexSet{})) return image_;
            return std::nullopt;
        }

    private:
        bool extend(std::size_t depth, const VertexSet& used)
        {
            if (depth == order_.size()) return true;
            int p = order_[depth];
            VertexSet candidates = host_.vertices() - used;
            for (std::size_t j = 0; j < depth; ++j) {
                int q = order_[j];
                const VertexSet& nq = host_.neighbors(image_[static_cast<std::size_t>(q)]);
                if (pattern_.adjacent(p, q))
                    candidates &= nq;
                else
                    candidates -= nq;
            }
            int need = pattern_.degree(p);
            for (int v : candidates) {
                if (host_.degree(v) < need) continue;
                image_[static_cast<std::size_t>(p)] = v;
                VertexSet next = used;
                next.insert(v);
                if (extend(depth + 1, next)) return true;
            }
            image_[static_cast<std::size_t>(p)] = -1;
            return false;
        }

        const Graph& host_;
        const Graph& pattern_;
        std::vector<int> order_;
        std::vector<int> image_;
    };

}  // namespace

std::optional<PatternWitness> find_induced(const Graph& host, const Graph& pattern, PatternKind kind)
{
    if (pattern.order() > kMaxPatternOrder)
        throw std::invalid_argument("pattern order " + std::to_string(pattern.order()) + " exceeds " +
                                    std::to_string(kMaxPatternOrder));
    auto image = InducedSearch(host, pattern).run();
    if (!image) return std::nullopt;
    return PatternWitness{kind, pattern, std::move(*image)};
}

std::optional<PatternWitness> find_induced(const Graph& host, PatternKind kind)
{
    return find_induced(host, pattern_graph(kind), kind);
}

W5FreeResult is_w5_free(const Graph& g)
{
    auto w = find_induced(g, PatternKind::W5);
    return {!w.has_value(), std::move(w)};
}

bool is_dominating_edge(const Graph& g, int x, int y)
{
    if (!g.adjacent(x, y)) return false;
    VertexSet covered = g.neighbors(x) | g.neighbors(y);
    covered.insert(x);
    covered.insert(y);
    return covered == g.vertices();
}

std::optional<Edge> dominating_edge(const Graph& g)
{
    for (auto [x, y] : g.edges())
        if (is_dominating_edge(g, x, y)) return Edge{x, y};
    return std::nullopt;
}

std::optional<PatternWitness> find_independent_triple(const Graph& g)
{
    for (int a = 0; a < g.order(); ++a) {
        VertexSet rest = g.vertices() - g.neighbors(a);
        for (int b = rest.next(a); b >= 0; b = rest.next(b)) {
            VertexSet third = rest - g.neighbors(b);
            int c = third.next(b);
            if (c >= 0) return make_witness(PatternKind::Independent3, {a, b, c});
        }
    }
    return std::nullopt;
}

std::optional<PatternWitness> w5_on(const Graph& g, const VertexSet& six)
{
    if (six.size() != 6) return std::nullopt;
    auto sub = induced_subgraph(g, six);
    auto w = find_induced(sub.graph, PatternKind::W5);
    if (!w) return std::nullopt;
    for (auto& v : w->mapping) v = sub.to_host[static_cast<std::size_t>(v)];
    return w;
}

namespace {

    /// Lowest-lexicographic choice of pairwise distinct representatives.
    bool choose_distinct(const std::vector<std::vector<int>>& candidates, std::size_t i, std::vector<int>& chosen,
                         VertexSet& taken)
    {
        if (i == candidates.size()) return true;
        for (int v : candidates[i]) {
            if (taken.contains(v)) continue;
            chosen[i] = v;
            taken.insert(v);
            if (choose_distinct(candidates, i + 1, chosen, taken)) return true;
            taken.erase(v);
        }
        return false;
    }

}  // namespace

Cor7Result corollary7_witness(const Graph& g, const PatternWitness& w5)
{
    if (w5.kind != PatternKind::W5 || !validate_pattern_witness(g, w5))
        throw PreconditionError("argument is not a valid induced W5 witness in the host");
    if (independence_number(g) > 2) throw PreconditionError("host has independence number greater than 2");

    int z = w5.mapping[0];
    std::array<int, 5> x{};
    for (std::size_t i = 0; i < 5; ++i) x[i] = w5.mapping[i + 1];

    for (int xi : x)
        if (is_dominating_edge(g, z, xi)) return Cor7Result{Cor7Kind::DominatingEdge, Edge{std::min(z, xi), std::max(z, xi)}, std::nullopt};

    VertexSet wheel = w5.image();
    VertexSet outside = g.vertices() - wheel;
    std::vector<std::vector<int>> candidates(5);
    for (std::size_t i = 0; i < 5; ++i) {
        VertexSet c = outside - g.neighbors(x[i]) - g.neighbors(z);
        if (c.empty()) throw ConstructionError("no vertex misses both hub and rim vertex", Edge{z, x[i]});
        for (int y : c) {
            // alpha <= 2 forces y to see the two rim vertices opposite x_i
            int a = x[(i + 2) % 5];
            int b = x[(i + 3) % 5];
            if (!g.adjacent(y, a)) throw ConstructionError("candidate misses an opposite rim vertex", Edge{y, a});
            if (!g.adjacent(y, b)) throw ConstructionError("candidate misses an opposite rim vertex", Edge{y, b});
        }
        candidates[i] = c.to_vector();
    }

    std::vector<int> y(5, -1);
    VertexSet taken;
    if (!choose_distinct(candidates, 0, y, taken)) {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                if (candidates[i].size() == 1 && candidates[j].size() == 1 && candidates[i][0] == candidates[j][0])
                    throw ConstructionError("rim vertices share their only candidate", Edge{x[i], x[j]});
        throw ConstructionError("no distinct choice of candidates exists", Edge{x[0], x[1]});
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (!g.adjacent(y[i], y[j])) throw ConstructionError("chosen candidates are not adjacent", Edge{y[i], y[j]});

    std::vector<int> mapping(y.begin(), y.end());
    mapping.push_back(z);
    auto witness = make_witness(PatternKind::CoStar5, std::move(mapping));
    if (!validate_pattern_witness(g, witness))
        throw ConstructionError("constructed vertices do not induce the complement of K_{1,5}", Edge{y[0], z});
    return Cor7Result{Cor7Kind::CoStarWitness, std::nullopt, std::move(witness)};
}

}  // namespace hadwiger
