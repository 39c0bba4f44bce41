#pragma once

#include "hadwiger/graph.hpp"

#include <vector>

namespace hadwiger {

/// A maximum clique of g. Deterministic: the search visits vertices in a
/// fixed (degree, index) order and keeps the first optimum it proves.
VertexSet maximum_clique(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);

int clique_number(const Graph& g);
int independence_number(const Graph& g);

/// Maximum-cardinality matching by Edmonds' blossom contraction. Edges are
/// returned as (u, v), u < v, sorted.
std::vector<Edge> maximum_matching(const Graph& g);
int max_matching(const Graph& g);

struct Coloring {
    int colors = 0;
    std::vector<int> color;  // vertex -> 0..colors-1
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Exact DSATUR branch and bound: greedy DSATUR upper bound, clique lower bound.
Coloring chromatic_coloring_branch_and_bound(const Graph& g);

/// Exact only when independence_number(g) <= 2: colour classes have at most
/// two vertices, so an optimum pairs up non-adjacent vertices along a maximum
/// matching of the complement. Throws std::domain_error otherwise.
Coloring chromatic_coloring_by_matching(const Graph& g);

/// Dispatches to the matching route when alpha <= 2, else branch and bound.
Coloring chromatic_coloring(const Graph& g);
int chromatic_number(const Graph& g);

struct InvariantReport {
    int n = 0;
    int alpha = 0;
    int omega = 0;
    int chi = 0;
};

InvariantReport compute_invariants(const Graph& g);

}  // namespace hadwiger
