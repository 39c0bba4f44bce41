#include "hadwiger/graph.hpp"

#include <sstream>

namespace hadwiger {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside the graph");
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        rows_[static_cast<std::size_t>(u)].insert(v);
        rows_[static_cast<std::size_t>(v)].insert(u);
    }
}

Graph Graph::from_rows(std::vector<VertexSet> rows)
{
    Graph g(static_cast<int>(rows.size()));
    VertexSet all = g.vertices();
    for (int v = 0; v < g.n_; ++v) {
        const auto& r = rows[static_cast<std::size_t>(v)];
        if (!r.is_subset_of(all)) throw GraphError("row " + std::to_string(v) + " names a vertex outside the graph");
        if (r.contains(v)) throw GraphError("loop at vertex " + std::to_string(v));
        for (int u : r)
            if (!rows[static_cast<std::size_t>(u)].contains(v)) throw GraphError("asymmetric adjacency rows");
    }
    g.rows_ = std::move(rows);
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v)) out.emplace_back(u, v);
    return out;
}

void Graph::require_subset(const VertexSet& s) const
{
    if (!s.is_subset_of(vertices())) throw GraphError("vertex set " + to_string(s) + " exceeds graph of order " + std::to_string(n_));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    InducedSubgraph out;
    out.to_host = s.to_vector();
    std::vector<int> to_local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_host.size(); ++i) to_local[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);

    std::vector<VertexSet> rows(out.to_host.size());
    for (std::size_t i = 0; i < out.to_host.size(); ++i)
        for (int u : g.neighbors(out.to_host[i]) & s) rows[i].insert(to_local[static_cast<std::size_t>(u)]);
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

Graph complement(const Graph& g)
{
    VertexSet all = g.vertices();
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        rows[static_cast<std::size_t>(v)] = all - g.neighbors(v);
        rows[static_cast<std::size_t>(v)].erase(v);
    }
    return Graph::from_rows(std::move(rows));
}

namespace {
    void require_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b)
    {
        g.require_subset(a);
        g.require_subset(b);
        if (a.intersects(b)) throw GraphError("sets " + to_string(a) + " and " + to_string(b) + " overlap");
    }
}

bool is_complete(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    require_disjoint(g, a, b);
    for (int v : a)
        if (!b.is_subset_of(g.neighbors(v))) return false;
    return true;
}

bool is_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    require_disjoint(g, a, b);
    for (int v : a)
        if (b.intersects(g.neighbors(v))) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    for (int v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    for (int v : s)
        if (s.intersects(g.neighbors(v))) return false;
    return true;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& t)
{
    VertexSet out = g.vertices();
    for (int v : t) out &= g.neighbors(v);
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s)
{
    VertexSet out;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

bool is_connected(const Graph& g, const VertexSet& s)
{
    if (s.empty()) return false;
    VertexSet reached;
    reached.insert(s.first());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet grown = neighborhood(g, frontier) & s;
        frontier = grown - reached;
        reached |= grown;
    }
    return reached == s;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s)
{
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp;
        comp.insert(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet grown = neighborhood(g, frontier) & left;
            frontier = grown - comp;
            comp |= grown;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

Edge find_non_edge(const Graph& g, const VertexSet& s)
{
    for (int u : s) {
        VertexSet missing = s - g.neighbors(u);
        int v = missing.next(u);
        if (v >= 0) return {u, v};
    }
    return {-1, -1};
}

std::string to_string(const VertexSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace hadwiger
