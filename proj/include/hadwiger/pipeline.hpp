#pragma once

#include "hadwiger/decomposition.hpp"
#include "hadwiger/minors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hadwiger {

enum class Branch {
    AlphaExceedsTwo,  // hypothesis fails: independent triple
    Clique,           // alpha <= 1
    C5Free,           // no induced C5; settled by the known C5-free result
    W5Present,        // hypothesis fails: induced W5
    Cover,            // inflation, classification, claims and cover all ran
};

enum class Outcome { Verified, HypothesisFailed, Anomaly };

std::string to_string(Branch b);
std::string to_string(Outcome o);
Branch branch_from_string(const std::string& s);
Outcome outcome_from_string(const std::string& s);

struct PipelineOptions {
    /// Cross-check h >= ceil(n/2) with the minor search up to this order.
    int minor_check_max_n = 14;
    /// Wall-clock budget for that search, started when the search starts.
    std::optional<std::chrono::duration<double>> minor_budget;
};

struct MinorCrossCheck {
    int threshold = 0;
    MinorStatus status = MinorStatus::Absent;
    std::optional<MinorWitness> witness;
};

struct BoundSummary {
    int omega = 0;
    int max_cover = 0;
    int cover_bound = 0;          // ceil((n+2)/4)
    int seagull_threshold_x4 = 0; // n (even) or n+3 (odd)
    bool seagull = false;
};

/// Everything a validator needs to re-check a run without repeating the
/// searches that produced it.
struct Certificate {
    int n = 0;
    std::vector<Edge> edges;
    std::string hash;
    Branch branch = Branch::Clique;
    Outcome outcome = Outcome::Verified;
    int alpha = 0;
    /// Independent triple, W5, or the C5 seed, depending on the branch.
    std::optional<PatternWitness> pattern;
    std::optional<InflationPartition> inflation;
    std::optional<Decomposition> decomposition;
    std::optional<ClassifyFailure> classify_failure;
    std::optional<PatternWitness> classify_witness;
    std::vector<ClaimViolation> violations;
    std::optional<CliqueCover> cover;
    std::optional<CoverCheck> cover_check;
    std::optional<BoundSummary> bound;
    std::optional<MinorCrossCheck> minor;
    std::vector<std::string> anomalies;

    Graph graph() const { return Graph(n, edges); }
};

/// Runs the whole chain on one graph: alpha test, clique shortcut, induced
/// C5 and W5 search, maximal inflation, classification, claim checks, the
/// four-clique cover and its bound, then the optional minor threshold check.
Certificate verify_pipeline(const Graph& g, const PipelineOptions& options = {});

struct Revalidation {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Re-checks every witness and identity stored in the certificate.
Revalidation revalidate(const Certificate& c);

}  // namespace hadwiger
