#pragma once

#include "hadwiger/vertex_set.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hadwiger {

using Edge = std::pair<int, int>;

/// Raised for malformed graphs and vertex sets that do not fit their graph.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1, stored as one bit-row per
/// vertex. Immutable once built: every derived graph is a new value.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws GraphError on loops or endpoints outside 0..n-1. Repeated
    /// edges collapse.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    /// Builds from precomputed rows; rows must be symmetric and loop-free.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const { return n_; }
    int size() const;  // edge count

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Throws GraphError if s contains a vertex outside 0..n-1.
    void require_subset(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// G[S] relabelled onto 0..|S|-1 in increasing order of original id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new id -> original id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

/// Every a-b pair adjacent. Throws GraphError when a and b overlap.
bool is_complete(const Graph& g, const VertexSet& a, const VertexSet& b);
/// No a-b pair adjacent. Throws GraphError when a and b overlap.
bool is_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Vertices adjacent to every member of t; all vertices when t is empty.
VertexSet common_neighbors(const Graph& g, const VertexSet& t);

/// Union of neighbourhoods of the vertices in s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// False for the empty set.
bool is_connected(const Graph& g, const VertexSet& s);

/// Connected components of G[s], each as a vertex set, ordered by least member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

/// A non-adjacent pair inside s, lowest first; {-1, -1} when s is a clique.
Edge find_non_edge(const Graph& g, const VertexSet& s);

std::string to_string(const VertexSet& s);

}  // namespace hadwiger
