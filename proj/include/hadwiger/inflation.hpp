#pragma once

#include "hadwiger/detect.hpp"
#include "hadwiger/graph.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadwiger {

/// Part index arithmetic modulo 5; parts are numbered 0..4.
constexpr int mod5(int i) { return ((i % 5) + 5) % 5; }

/// Five cliques X_0..X_4 placed around a 5-cycle: each complete to its two
/// cyclic neighbours and anticomplete to the other two. `rest` is V \ X.
struct InflationPartition {
    std::array<VertexSet, 5> parts;
    VertexSet rest;

    const VertexSet& part(int i) const { return parts[static_cast<std::size_t>(mod5(i))]; }
    VertexSet all_parts() const;
};

/// Whether v could join part i: complete to X_{i-1}, X_i, X_{i+1} and
/// anticomplete to X_{i+2}, X_{i+3}.
bool can_join_part(const Graph& g, const InflationPartition& p, int v, int i);

/// Grows the seed C5 (mapping[i] becomes the sole member of part i) to a
/// fixpoint: scan rest in index order, try parts 0..4 in order, restart
/// after each absorption. Throws std::invalid_argument for a bad seed.
InflationPartition maximal_inflation(const Graph& g, const PatternWitness& seed);

enum class InflationViolationKind {
    EmptyPart,
    PartNotClique,
    NotCompleteToNeighbor,
    NotAnticompleteToNonNeighbor,
    NotAPartition,
    NotMaximal,
};

std::string to_string(InflationViolationKind k);

struct InflationViolation {
    InflationViolationKind kind;
    int part = -1;
    std::vector<int> vertices;  // offending vertex or pair
};

struct InflationCheck {
    bool ok = true;
    std::vector<InflationViolation> violations;
};

InflationCheck verify_inflation(const Graph& g, const InflationPartition& p);

/// Relabels part i as part i+shift.
InflationPartition rotate(const InflationPartition& p, int shift);

}  // namespace hadwiger
