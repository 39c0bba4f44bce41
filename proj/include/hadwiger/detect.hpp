#pragma once

#include "hadwiger/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadwiger {

enum class PatternKind {
    C5,           // vertices 0..4 in cyclic order
    W5,           // hub 0, rim 1..5 in cyclic order
    CoStar5,      // complement of K_{1,5}: clique 0..4, vertex 5 isolated
    Independent3, // three pairwise non-adjacent vertices
    Custom,
};

std::string to_string(PatternKind k);
/// Throws std::invalid_argument for unknown names.
PatternKind pattern_kind_from_string(const std::string& s);

/// The hard-coded pattern graph for a named kind. Custom has none.
const Graph& pattern_graph(PatternKind kind);

/// Induced copy of `pattern` in a host: mapping[i] is the host vertex playing
/// pattern vertex i.
struct PatternWitness {
    PatternKind kind = PatternKind::Custom;
    Graph pattern;
    std::vector<int> mapping;

    VertexSet image() const { return VertexSet::from_range(mapping); }
};

PatternWitness make_witness(PatternKind kind, std::vector<int> mapping);

/// Injective, in range, and edge-for-edge (non-edges included) faithful.
bool validate_pattern_witness(const Graph& host, const PatternWitness& w);

inline constexpr int kMaxPatternOrder = 8;

/// Exhaustive induced-subgraph search. The pattern is placed in
/// degree-descending order; the first embedding in that order is returned.
/// Throws std::invalid_argument when the pattern exceeds kMaxPatternOrder.
std::optional<PatternWitness> find_induced(const Graph& host, const Graph& pattern,
                                           PatternKind kind = PatternKind::Custom);
std::optional<PatternWitness> find_induced(const Graph& host, PatternKind kind);

struct W5FreeResult {
    bool free = true;
    std::optional<PatternWitness> witness;
};

W5FreeResult is_w5_free(const Graph& g);

/// Lowest lexicographic edge xy such that every other vertex sees x or y.
std::optional<Edge> dominating_edge(const Graph& g);
bool is_dominating_edge(const Graph& g, int x, int y);

/// Three pairwise non-adjacent vertices, lowest lexicographic first.
std::optional<PatternWitness> find_independent_triple(const Graph& g);

/// The induced W5 on exactly these six vertices, if they induce one.
std::optional<PatternWitness> w5_on(const Graph& g, const VertexSet& six);

enum class Cor7Kind { DominatingEdge, CoStarWitness };

struct Cor7Result {
    Cor7Kind kind = Cor7Kind::DominatingEdge;
    std::optional<Edge> edge;
    std::optional<PatternWitness> witness;
};

/// Input violates the procedure's hypotheses (alpha > 2, bad W5 witness).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The y_1..y_5 construction broke on a concrete pair of vertices.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, Edge pair) : std::runtime_error(what), pair_(pair) {}
    Edge pair() const { return pair_; }

private:
    Edge pair_;
};

/// Given an induced W5 (hub z, rim x_1..x_5) in a host with alpha <= 2,
/// either return a dominating hub-rim edge z x_i, or pick for each i the
/// lowest y_i outside the wheel missing both x_i and z, and return
/// {y_1..y_5, z} as an induced complement of K_{1,5}.
Cor7Result corollary7_witness(const Graph& g, const PatternWitness& w5);

}  // namespace hadwiger
