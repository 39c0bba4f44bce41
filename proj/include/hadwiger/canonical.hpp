#pragma once

#include "hadwiger/graph.hpp"

#include <vector>

namespace hadwiger {

/// Canonical relabelling by individualisation-refinement: equitable
/// partition refinement, branching on the first non-singleton cell, and
/// pruning of branches that an already discovered automorphism maps onto
/// explored ones. Isomorphic inputs yield identical outputs.
struct CanonicalLabeling {
    Graph graph;
    std::vector<int> order;  // canonical position -> original vertex
};

CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace hadwiger
