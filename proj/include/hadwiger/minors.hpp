#pragma once

#include "hadwiger/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace hadwiger {

/// Branch sets of a K_t model: disjoint, each connected, every pair joined
/// by at least one edge. t is branch_sets.size().
struct MinorWitness {
    std::vector<VertexSet> branch_sets;

    int order() const { return static_cast<int>(branch_sets.size()); }
};

bool validate_minor_witness(const Graph& g, const MinorWitness& w);

using Deadline = std::chrono::steady_clock::time_point;

struct MinorSearchOptions {
    std::optional<Deadline> deadline;  // none: run to completion
};

enum class MinorStatus { Found, Absent, TimedOut };

struct MinorSearchResult {
    MinorStatus status = MinorStatus::Absent;
    std::optional<MinorWitness> witness;
    std::uint64_t nodes = 0;
};

/// Decides whether K_t is a minor of g. Branch sets are grown one at a time
/// around pivots taken in a fixed order (maximum-clique vertices first, then
/// degree, then index), each set a connected subgraph touching all earlier
/// sets; smaller sets are tried first. Absent means proven absent.
MinorSearchResult search_clique_minor(const Graph& g, int t, const MinorSearchOptions& options = {});

/// Unbounded form of search_clique_minor: a witness iff K_t is a minor.
std::optional<MinorWitness> has_clique_minor(const Graph& g, int t);

struct HadwigerResult {
    int h = 0;  // exact when `exact`, otherwise a proven lower bound
    bool exact = true;
    MinorWitness witness;  // K_h model
};

/// Largest t with a K_t minor; starts from the clique number and raises t
/// until the search proves absence.
HadwigerResult hadwiger_number(const Graph& g, const MinorSearchOptions& options = {});

}  // namespace hadwiger
