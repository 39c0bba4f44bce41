#pragma once

#include "hadwiger/graph.hpp"

#include <array>

namespace hadwiger::families {

Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
/// Vertices 0..n-1 in cyclic order.
Graph cycle(int n);
/// Hub 0, rim 1..n in cyclic order.
Graph wheel(int rim);
/// K_{2,2,2}; antipodal pairs are (0,1), (2,3), (4,5).
Graph octahedron();
Graph petersen();
/// C5 with one chord, i.e. the house graph: cycle 0..4 plus edge (0,2).
Graph house();
/// C5 blown up into cliques of the given sizes; class i holds a contiguous
/// id range starting at the sum of the earlier sizes.
Graph blown_up_c5(const std::array<int, 5>& sizes);
/// g plus a new vertex n adjacent to every old vertex.
Graph add_universal_vertex(const Graph& g);
/// g plus one vertex with the given neighbourhood.
Graph add_vertex(const Graph& g, const VertexSet& neighbors);

}  // namespace hadwiger::families
