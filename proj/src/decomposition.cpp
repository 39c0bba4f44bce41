#include "hadwiger/decomposition.hpp"

#include "hadwiger/invariants.hpp"

#include <algorithm>

namespace hadwiger {

namespace {
    std::size_t at(int i) { return static_cast<std::size_t>(mod5(i)); }

    VertexSet complete_members(const Graph& g, const VertexSet& candidates, const VertexSet& target)
    {
        VertexSet out;
        for (int v : candidates)
            if (target.is_subset_of(g.neighbors(v))) out.insert(v);
        return out;
    }

    /// First vertex of `x` adjacent / non-adjacent to v, or -1.
    int first_neighbor_in(const Graph& g, int v, const VertexSet& x) { return (x & g.neighbors(v)).first(); }
    int first_non_neighbor_in(const Graph& g, int v, const VertexSet& x) { return (x - g.neighbors(v)).first(); }
}

std::string to_string(ClassifyFailure f)
{
    switch (f) {
    case ClassifyFailure::CompleteToX: return "complete_to_x";
    case ClassifyFailure::IndependentTriple: return "independent_triple";
    case ClassifyFailure::MaximalityBreach: return "maximality_breach";
    case ClassifyFailure::AlphaExceedsTwo: return "alpha_exceeds_two";
    }
    return "unknown";
}

ClassificationError::ClassificationError(ClassifyFailure failure, int vertex, int part, std::optional<PatternWitness> witness)
    : std::runtime_error("cannot classify vertex " + std::to_string(vertex) + ": " + to_string(failure)), failure_(failure),
      vertex_(vertex), part_(part), witness_(std::move(witness))
{
}

Decomposition classify(const Graph& g, const InflationPartition& p)
{
    if (auto triple = find_independent_triple(g)) {
        int v = triple->mapping[0];
        throw ClassificationError(ClassifyFailure::AlphaExceedsTwo, v, -1, std::move(triple));
    }

    Decomposition d;
    for (int v : p.rest) {
        const VertexSet& nv = g.neighbors(v);
        std::array<bool, 5> missing{};
        int missing_count = 0;
        for (int i = 0; i < 5; ++i) {
            missing[at(i)] = !p.part(i).is_subset_of(nv);
            missing_count += missing[at(i)];
        }

        if (missing_count == 0) {
            std::vector<int> mapping{v};
            for (int i = 0; i < 5; ++i) mapping.push_back(p.part(i).first());
            throw ClassificationError(ClassifyFailure::CompleteToX, v, -1, make_witness(PatternKind::W5, std::move(mapping)));
        }
        for (int i = 0; i < 5; ++i) {
            if (missing[at(i)] && missing[at(i + 2)]) {
                int a = first_non_neighbor_in(g, v, p.part(i));
                int b = first_non_neighbor_in(g, v, p.part(i + 2));
                std::vector<int> triple{v, a, b};
                std::sort(triple.begin(), triple.end());
                throw ClassificationError(ClassifyFailure::IndependentTriple, v, i,
                                          make_witness(PatternKind::Independent3, std::move(triple)));
            }
        }

        // At most two parts are missed now, and they are consecutive.
        int i = 0;
        while (!missing[at(i)]) ++i;
        if (missing_count == 1) {
            d.y[at(i)].insert(v);
            continue;
        }
        if (!missing[at(i + 1)]) i = mod5(i - 1);  // the pair is (4, 0)

        bool lo = !p.part(i).intersects(nv);
        bool hi = !p.part(i + 1).intersects(nv);
        if (lo && hi) throw ClassificationError(ClassifyFailure::MaximalityBreach, v, mod5(i + 3), std::nullopt);
        d.z[at(i)].insert(v);
        if (lo) d.z_lo[at(i)].insert(v);
        if (hi) d.z_hi[at(i)].insert(v);
    }

    d.a1 = complete_members(g, d.z_lo[0], d.y[4]);
    d.b1 = complete_members(g, d.z_lo[0] - d.a1, d.z_hi[1]);
    d.a3 = complete_members(g, d.z_lo[2], d.y[1]);
    d.b3 = complete_members(g, d.z_lo[2] - d.a3, d.z_hi[3]);
    d.y1_prime = complete_members(g, d.y[0], d.y[4]);
    d.y1_dprime = complete_members(g, d.y[0] - d.y1_prime, d.y[2]);
    return d;
}

std::vector<std::string> verify_decomposition(const Graph& g, const InflationPartition& p, const Decomposition& d)
{
    std::vector<std::string> problems;
    auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
    VertexSet x = p.all_parts();

    VertexSet covered;
    for (int i = 0; i < 5; ++i) {
        for (const VertexSet* s : {&d.y[at(i)], &d.z[at(i)]}) {
            if (s->intersects(covered)) fail("classes overlap at index " + std::to_string(i));
            covered |= *s;
        }
    }
    if (covered != p.rest) fail("Y and Z classes do not cover the rest exactly");

    for (int i = 0; i < 5; ++i) {
        for (int v : d.y[at(i)]) {
            if (!(x - p.part(i)).is_subset_of(g.neighbors(v)) || p.part(i).is_subset_of(g.neighbors(v)))
                fail("vertex " + std::to_string(v) + " does not meet the Y_" + std::to_string(i) + " definition");
        }
        VertexSet pair = p.part(i) | p.part(i + 1);
        for (int v : d.z[at(i)]) {
            if (!(x - pair).is_subset_of(g.neighbors(v)) || p.part(i).is_subset_of(g.neighbors(v)) ||
                p.part(i + 1).is_subset_of(g.neighbors(v)))
                fail("vertex " + std::to_string(v) + " does not meet the Z_" + std::to_string(i) + " definition");
        }
        if (!d.z_lo[at(i)].is_subset_of(d.z[at(i)]) || !d.z_hi[at(i)].is_subset_of(d.z[at(i)]) ||
            d.z_lo[at(i)].intersects(d.z_hi[at(i)]))
            fail("Z_" + std::to_string(i) + " split is not a disjoint sub-partition");
        for (int v : d.z_lo[at(i)])
            if (p.part(i).intersects(g.neighbors(v))) fail("vertex " + std::to_string(v) + " in the low split sees X_" + std::to_string(i));
        for (int v : d.z_hi[at(i)])
            if (p.part(i + 1).intersects(g.neighbors(v)))
                fail("vertex " + std::to_string(v) + " in the high split sees X_" + std::to_string(i + 1));
    }

    auto check_split = [&](const char* name, const VertexSet& whole, const VertexSet& first, const VertexSet& second,
                           const VertexSet& first_target, const VertexSet& second_target) {
        if (first != complete_members(g, whole, first_target)) fail(std::string(name) + ": first part mismatch");
        if (second != complete_members(g, whole - first, second_target)) fail(std::string(name) + ": second part mismatch");
    };
    check_split("A1/B1", d.z_lo[0], d.a1, d.b1, d.y[4], d.z_hi[1]);
    check_split("A3/B3", d.z_lo[2], d.a3, d.b3, d.y[1], d.z_hi[3]);
    check_split("Y1'/Y1''", d.y[0], d.y1_prime, d.y1_dprime, d.y[4], d.y[2]);
    return problems;
}

std::string to_string(ClaimId c)
{
    switch (c) {
    case ClaimId::Claim1: return "1";
    case ClaimId::Claim2: return "2";
    case ClaimId::Claim3: return "3";
    case ClaimId::Claim4: return "4";
    case ClaimId::Claim5: return "5";
    case ClaimId::Claim6: return "6";
    case ClaimId::A3CompleteToY1Dprime: return "A3Y1";
    }
    return "?";
}

ClaimId claim_id_from_string(const std::string& s)
{
    for (auto c : {ClaimId::Claim1, ClaimId::Claim2, ClaimId::Claim3, ClaimId::Claim4, ClaimId::Claim5, ClaimId::Claim6,
                   ClaimId::A3CompleteToY1Dprime})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown claim id '" + s + "'");
}

namespace {

    class ClaimChecker {
    public:
        ClaimChecker(const Graph& g, const InflationPartition& p, const Decomposition& d) : g_(g), p_(p), d_(d) {}

        std::vector<ClaimViolation> run()
        {
            for (int i = 0; i < 5; ++i) {
                claim1(i);
                claim2(i);
                claim3(i);
                claim4(i);
                claim5(i);
                claim6(i);
            }
            a3_complete_to_y1_dprime();
            return std::move(out_);
        }

    private:
        int rep(int i) const { return p_.part(i).first(); }

        PatternWitness triple(int a, int b, int c) const
        {
            std::vector<int> t{a, b, c};
            std::sort(t.begin(), t.end());
            return make_witness(PatternKind::Independent3, std::move(t));
        }

        /// Hub first, then the rim in cyclic order.
        PatternWitness wheel(int hub, std::array<int, 5> rim) const
        {
            std::vector<int> mapping{hub};
            mapping.insert(mapping.end(), rim.begin(), rim.end());
            return make_witness(PatternKind::W5, std::move(mapping));
        }

        /// Keeps the prescribed witness if it checks out; otherwise falls back
        /// to any independent triple or induced W5 in the host.
        void report(ClaimId claim, int i, std::vector<int> vertices, std::optional<PatternWitness> prescribed)
        {
            ClaimViolation v{claim, i, std::move(vertices), std::nullopt};
            if (prescribed && validate_pattern_witness(g_, *prescribed))
                v.witness = std::move(prescribed);
            else if (auto t = find_independent_triple(g_))
                v.witness = std::move(t);
            else if (auto w = is_w5_free(g_); !w.free)
                v.witness = std::move(w.witness);
            out_.push_back(std::move(v));
        }

        /// A non-adjacent pair inside a set that should be a clique because
        /// every member misses something in X_i.
        void clique_via_common_miss(ClaimId claim, int i, const VertexSet& s)
        {
            auto [a, b] = find_non_edge(g_, s);
            if (a < 0) return;
            VertexSet common = p_.part(i) - g_.neighbors(a) - g_.neighbors(b);
            std::optional<PatternWitness> w;
            if (!common.empty()) w = triple(a, b, common.first());
            report(claim, i, {a, b}, std::move(w));
        }

        void claim1(int i)
        {
            for (int y : d_.y[at(i)]) {
                int seen = first_neighbor_in(g_, y, p_.part(i));
                if (seen < 0) continue;
                report(ClaimId::Claim1, i, {y, seen}, wheel(y, {seen, rep(i + 1), rep(i + 2), rep(i + 3), rep(i + 4)}));
            }
            clique_via_common_miss(ClaimId::Claim1, i, d_.y[at(i)]);
        }

        void claim2(int i)
        {
            auto [z, z2] = find_non_edge(g_, d_.z[at(i)]);
            if (z < 0) return;
            int x1 = first_non_neighbor_in(g_, z, p_.part(i));
            int x2 = first_non_neighbor_in(g_, z, p_.part(i + 1));
            std::optional<PatternWitness> w;
            if (!g_.adjacent(z2, x1))
                w = triple(z, z2, x1);
            else if (!g_.adjacent(z2, x2))
                w = triple(z, z2, x2);
            else
                w = wheel(z2, {x1, x2, rep(i + 2), rep(i + 3), rep(i + 4)});
            report(ClaimId::Claim2, i, {z, z2}, std::move(w));
        }

        void claim3(int i)
        {
            for (int z : d_.z[at(i)] - d_.z_lo[at(i)] - d_.z_hi[at(i)]) {
                int a = first_neighbor_in(g_, z, p_.part(i));
                int b = first_neighbor_in(g_, z, p_.part(i + 1));
                report(ClaimId::Claim3, i, {z}, wheel(z, {a, b, rep(i + 2), rep(i + 3), rep(i + 4)}));
            }
        }

        void claim4(int i)
        {
            clique_via_common_miss(ClaimId::Claim4, i, d_.z_hi[at(i - 1)] | d_.y[at(i)] | d_.z[at(i)]);
            clique_via_common_miss(ClaimId::Claim4, i, d_.z[at(i - 1)] | d_.y[at(i)] | d_.z_lo[at(i)]);
        }

        void claim5(int i)
        {
            const VertexSet& ys = d_.y[at(i - 1)];
            const VertexSet& zs = d_.z_hi[at(i + 1)];
            for (int z : d_.z_lo[at(i)]) {
                VertexSet missed_y = ys - g_.neighbors(z);
                VertexSet missed_z = zs - g_.neighbors(z);
                if (missed_y.empty() || missed_z.empty()) continue;
                int y = missed_y.first();
                int z2 = missed_z.first();
                std::optional<PatternWitness> w;
                if (!g_.adjacent(y, z2))
                    w = triple(z, y, z2);
                else
                    w = w5_on(g_, VertexSet{y, z2, rep(i - 1), z, rep(i + 2), rep(i + 3)});
                report(ClaimId::Claim5, i, {z, y, z2}, std::move(w));
            }
        }

        void claim6(int i)
        {
            const VertexSet& before = d_.y[at(i - 1)];
            const VertexSet& skip = d_.y[at(i + 2)];
            for (int y1 : d_.y[at(i)]) {
                VertexSet missed5 = before - g_.neighbors(y1);
                VertexSet missed3 = skip - g_.neighbors(y1);
                if (missed5.empty() || missed3.empty()) continue;
                int y5 = missed5.first();
                int y3 = missed3.first();
                std::optional<PatternWitness> w;
                if (!g_.adjacent(y3, y5))
                    w = triple(y1, y3, y5);
                else
                    w = w5_on(g_, VertexSet{y5, y3, rep(i - 1), y1, rep(i + 2), rep(i + 3)});
                report(ClaimId::Claim6, i, {y1, y3, y5}, std::move(w));
            }
        }

        void a3_complete_to_y1_dprime()
        {
            for (int z : d_.a3) {
                for (int y1 : d_.y1_dprime - g_.neighbors(z)) {
                    int y5 = (d_.y[4] - g_.neighbors(y1)).first();
                    std::optional<PatternWitness> w;
                    if (y5 >= 0 && !g_.adjacent(z, y5)) {
                        w = triple(z, y1, y5);
                    }
                    else {
                        int x4 = first_neighbor_in(g_, z, p_.part(3));
                        if (y5 >= 0 && x4 >= 0) w = w5_on(g_, VertexSet{z, y5, rep(2), y1, rep(4), x4});
                    }
                    report(ClaimId::A3CompleteToY1Dprime, 2, {z, y1}, std::move(w));
                }
            }
        }

        const Graph& g_;
        const InflationPartition& p_;
        const Decomposition& d_;
        std::vector<ClaimViolation> out_;
    };

}  // namespace

std::vector<ClaimViolation> verify_claims(const Graph& g, const InflationPartition& p, const Decomposition& d)
{
    return ClaimChecker(g, p, d).run();
}

CliqueCover assemble_cover(const InflationPartition& p, const Decomposition& d)
{
    CliqueCover c;
    c.h[0] = p.part(2) | p.part(3) | d.y[4] | d.z[4] | d.y1_prime | d.a1;
    c.h[1] = p.part(3) | p.part(4) | d.b1 | d.z_hi[0] | d.y[1] | d.z[1];
    c.h[2] = p.part(0) | p.part(1) | d.b3 | d.z_hi[2] | d.y[3] | d.z[3];
    c.h[3] = p.part(4) | d.y1_dprime | d.y[2] | d.a3;
    return c;
}

CoverCheck check_cover(const Graph& g, const InflationPartition& p, const CliqueCover& c)
{
    CoverCheck out;
    for (std::size_t j = 0; j < 4; ++j) {
        out.sizes[j] = c.h[j].size();
        out.sum += out.sizes[j];
        out.max_size = std::max(out.max_size, out.sizes[j]);
        if (!is_clique(g, c.h[j])) out.all_cliques = false;
    }
    int n = g.order();
    out.expected_sum = n + p.part(3).size() + p.part(4).size();
    out.identity_holds = out.sum == out.expected_sum;
    out.ceil_quarter_n_plus_2 = (n + 2 + 3) / 4;
    return out;
}

CoverError::CoverError(const std::string& what, int set, Edge pair, std::optional<PatternWitness> w5)
    : std::runtime_error(what), set_(set), pair_(pair), host_w5_(std::move(w5))
{
}

CoverResult build_cover(const Graph& g, const InflationPartition& p, const Decomposition& d)
{
    CoverResult r{assemble_cover(p, d), {}};
    r.check = check_cover(g, p, r.cover);
    for (int j = 0; j < 4; ++j) {
        auto [a, b] = find_non_edge(g, r.cover.h[static_cast<std::size_t>(j)]);
        if (a >= 0)
            throw CoverError("H_" + std::to_string(j + 1) + " is not a clique", j, Edge{a, b}, is_w5_free(g).witness);
    }
    if (!r.check.identity_holds)
        throw CoverError("cover sizes sum to " + std::to_string(r.check.sum) + ", expected " +
                             std::to_string(r.check.expected_sum),
                         -1, Edge{-1, -1}, is_w5_free(g).witness);
    return r;
}

}  // namespace hadwiger
