#pragma once

#include "hadwiger/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hadwiger {

inline constexpr int kMaxExhaustiveOrder = 10;

/// One representative per isomorphism class of n-vertex triangle-free
/// graphs. Built one vertex at a time: each class on n-1 vertices is
/// extended by a vertex joined to an independent set, and children are
/// deduplicated by canonical form. Output is sorted by canonical graph6.
std::vector<Graph> enumerate_triangle_free(int n);

/// Complements of enumerate_triangle_free(n): every class with alpha <= 2.
/// Throws std::invalid_argument for n outside 0..kMaxExhaustiveOrder.
std::vector<Graph> enumerate_alpha2(int n);

/// Every isomorphism class on n vertices (n <= 8), same construction with
/// unrestricted neighbourhoods.
std::vector<Graph> enumerate_all_graphs(int n);

/// Random triangle-free process on the complement: visit all vertex pairs
/// in a seeded random order, keep a pair when it closes no triangle, then
/// complement. Deterministic per (n, seed); alpha of the result is <= 2.
Graph random_alpha2(int n, std::uint64_t seed);

/// Seed of the i-th sample of a run seeded with `seed` (splitmix64 step).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i);

enum class CorpusMode { Exhaustive, Random };

struct CorpusSpec {
    int n = 0;
    CorpusMode mode = CorpusMode::Exhaustive;
    int samples = 1;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument if the spec breaks its limits.
    void validate() const;
};

/// Parses "n=N[,samples=S][,seed=X][,mode=exhaustive|random]". Giving
/// samples or seed without a mode selects random mode.
CorpusSpec parse_corpus_spec(const std::string& text);

/// Calls `sink(graph, index, seed)` for each corpus graph in order; seed is
/// the per-sample seed in random mode and 0 otherwise.
void for_each_in_corpus(const CorpusSpec& spec,
                        const std::function<void(const Graph&, std::uint64_t, std::uint64_t)>& sink);

}  // namespace hadwiger
