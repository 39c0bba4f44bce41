#pragma once

#include "hadwiger/detect.hpp"
#include "hadwiger/inflation.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadwiger {

/// Classification of V \ X around a maximal C5 inflation. Parts and classes
/// are indexed 0..4; index i here is index i+1 in the usual 1-based naming,
/// so a1/b1 split Z_0^0 against Y_4 and Z_1^2, a3/b3 split Z_2^2 against
/// Y_1 and Z_3^4, and y1_prime/y1_dprime split Y_0 against Y_4 and Y_2.
struct Decomposition {
    /// Complete to X \ X_i, with a non-neighbour in X_i.
    std::array<VertexSet, 5> y;
    /// Complete to X \ (X_i ∪ X_{i+1}), with non-neighbours in both.
    std::array<VertexSet, 5> z;
    /// Members of z[i] anticomplete to X_i.
    std::array<VertexSet, 5> z_lo;
    /// Members of z[i] anticomplete to X_{i+1}.
    std::array<VertexSet, 5> z_hi;
    VertexSet a1, b1, a3, b3;
    VertexSet y1_prime, y1_dprime;
};

enum class ClassifyFailure {
    CompleteToX,        // rest vertex sees all of X: hub of a W5
    IndependentTriple,  // non-neighbours in two non-consecutive parts
    MaximalityBreach,   // vertex could still join a part
    AlphaExceedsTwo,
};

std::string to_string(ClassifyFailure f);

class ClassificationError : public std::runtime_error {
public:
    ClassificationError(ClassifyFailure failure, int vertex, int part, std::optional<PatternWitness> witness);

    ClassifyFailure failure() const { return failure_; }
    int vertex() const { return vertex_; }
    int part() const { return part_; }
    const std::optional<PatternWitness>& witness() const { return witness_; }

private:
    ClassifyFailure failure_;
    int vertex_;
    int part_;
    std::optional<PatternWitness> witness_;
};

/// Places every rest vertex in exactly one Y_i or Z_i and splits the Z, A/B
/// and Y'/Y'' families. A vertex matching no rule raises ClassificationError
/// with the certificate it implies. Vertices of Z_i meeting neither Z_i^i nor
/// Z_i^{i+1}, or escaping A/B or Y'/Y'', stay unsplit for verify_claims.
Decomposition classify(const Graph& g, const InflationPartition& p);

/// Definitional re-check of every class against the partition; one message
/// per problem, empty when consistent.
std::vector<std::string> verify_decomposition(const Graph& g, const InflationPartition& p, const Decomposition& d);

enum class ClaimId { Claim1, Claim2, Claim3, Claim4, Claim5, Claim6, A3CompleteToY1Dprime };

std::string to_string(ClaimId c);
ClaimId claim_id_from_string(const std::string& s);

struct ClaimViolation {
    ClaimId claim = ClaimId::Claim1;
    int index = 0;              // the rotation i the claim was checked at
    std::vector<int> vertices;  // the violating tuple
    /// Induced W5 (or independent triple, when alpha <= 2 is what breaks)
    /// built from the violating tuple; empty if none could be produced.
    std::optional<PatternWitness> witness;
};

/// Checks all structural claims for every rotation; each violation carries
/// the witness its refutation builds, validated before being returned.
std::vector<ClaimViolation> verify_claims(const Graph& g, const InflationPartition& p, const Decomposition& d);

struct CliqueCover {
    std::array<VertexSet, 4> h;
};

/// H_1..H_4 (stored as h[0..3]) assembled from the partition and classes.
CliqueCover assemble_cover(const InflationPartition& p, const Decomposition& d);

struct CoverCheck {
    std::array<int, 4> sizes{};
    int sum = 0;
    int expected_sum = 0;  // n + |X_4| + |X_5|, i.e. n + |part 3| + |part 4|
    int max_size = 0;
    int ceil_quarter_n_plus_2 = 0;
    bool all_cliques = true;
    bool identity_holds = false;
};

CoverCheck check_cover(const Graph& g, const InflationPartition& p, const CliqueCover& c);

class CoverError : public std::runtime_error {
public:
    CoverError(const std::string& what, int set, Edge pair, std::optional<PatternWitness> w5);

    int set() const { return set_; }
    Edge pair() const { return pair_; }
    /// Re-test of the host: a W5 here means the input broke the hypothesis.
    const std::optional<PatternWitness>& host_w5() const { return host_w5_; }

private:
    int set_;
    Edge pair_;
    std::optional<PatternWitness> host_w5_;
};

struct CoverResult {
    CliqueCover cover;
    CoverCheck check;
};

/// Assembles and checks the cover; a non-clique H_j or a failed counting
/// identity raises CoverError.
CoverResult build_cover(const Graph& g, const InflationPartition& p, const Decomposition& d);

}  // namespace hadwiger
