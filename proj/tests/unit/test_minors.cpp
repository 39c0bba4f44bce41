#include "hadwiger/families.hpp"
#include "hadwiger/generate.hpp"
#include "hadwiger/invariants.hpp"
#include "hadwiger/minors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hadwiger;
namespace F = hadwiger::families;

namespace {

std::vector<std::vector<int>> parts_of(const MinorWitness& w)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : w.branch_sets) out.push_back(s.to_vector());
    return out;
}

}  // namespace

TEST_CASE("has_clique_minor examples")
{
    auto k6 = has_clique_minor(F::complete(6), 6);
    REQUIRE(k6);
    CHECK(k6->order() == 6);
    for (const auto& s : k6->branch_sets) CHECK(s.size() == 1);

    auto c5 = F::cycle(5);
    auto three = has_clique_minor(c5, 3);
    REQUIRE(three);
    CHECK(validate_minor_witness(c5, *three));
    CHECK_FALSE(has_clique_minor(c5, 4));
    CHECK(oracle::hadwiger(c5) == 3);
}

TEST_CASE("trivial orders")
{
    CHECK(has_clique_minor(F::edgeless(3), 0));
    CHECK(has_clique_minor(F::edgeless(3), 1));
    CHECK_FALSE(has_clique_minor(F::edgeless(3), 2));
    CHECK_FALSE(has_clique_minor(F::complete(3), 4));
    CHECK(hadwiger_number(Graph(0)).h == 0);
}

TEST_CASE("hadwiger_number examples")
{
    CHECK(hadwiger_number(F::cycle(5)).h == 3);
    CHECK(hadwiger_number(F::wheel(5)).h == 4);
    CHECK(hadwiger_number(F::complete(6)).h == 6);
    CHECK(hadwiger_number(F::octahedron()).h == 4);
    CHECK(hadwiger_number(F::petersen()).h == 5);
    // oracle values pinned: L(K5) and the 2-blow-up of C5 both have h = 6
    CHECK(hadwiger_number(complement(F::petersen())).h == 6);
    CHECK(hadwiger_number(F::blown_up_c5({2, 2, 2, 2, 2})).h == 6);
}

TEST_CASE("validate_minor_witness examples")
{
    auto c5 = F::cycle(5);
    CHECK(validate_minor_witness(c5, MinorWitness{{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}}}));
    CHECK_FALSE(validate_minor_witness(c5, MinorWitness{{VertexSet{0}, VertexSet{2}}}));
    CHECK_FALSE(validate_minor_witness(c5, MinorWitness{{VertexSet{0, 2}}}));
    CHECK_FALSE(validate_minor_witness(c5, MinorWitness{{VertexSet{0, 1}, VertexSet{1, 2}}}));  // overlap
    CHECK_FALSE(validate_minor_witness(c5, MinorWitness{{VertexSet{}, VertexSet{1}}}));         // empty set
    CHECK_FALSE(validate_minor_witness(c5, MinorWitness{{VertexSet{7}}}));                      // out of range
    CHECK(validate_minor_witness(c5, MinorWitness{}));
}

TEST_CASE("hadwiger_number matches the partition oracle on every graph up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : enumerate_all_graphs(n)) {
            auto r = hadwiger_number(g);
            CHECK(r.exact);
            CHECK(r.h == oracle::hadwiger(g));
            CHECK(r.witness.order() == r.h);
            CHECK(validate_minor_witness(g, r.witness));
            CHECK(oracle::is_minor_model(g, parts_of(r.witness)));
            CHECK(r.h >= clique_number(g));
        }
    }
}

TEST_CASE("witnesses validate and the search is anti-monotone in t")
{
    std::mt19937 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 7 + trial % 6;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 35) edges.emplace_back(u, v);
        Graph g(n, edges);
        int h = hadwiger_number(g).h;
        for (int t = 0; t <= n; ++t) {
            auto w = has_clique_minor(g, t);
            CHECK(w.has_value() == (t <= h));
            if (w) {
                CHECK(w->order() == t);
                CHECK(validate_minor_witness(g, *w));
                CHECK(oracle::is_minor_model(g, parts_of(*w)));
            }
        }
    }
}

TEST_CASE("deleting vertices never raises h")
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto g = random_alpha2(10, s);
        int h = hadwiger_number(g).h;
        for (int v = 0; v < g.order(); v += 3) {
            auto sub = induced_subgraph(g, g.vertices() - VertexSet{v}).graph;
            CHECK(hadwiger_number(sub).h <= h);
        }
    }
}

TEST_CASE("search results carry node counts and are deterministic")
{
    auto g = random_alpha2(14, 99);
    auto a = search_clique_minor(g, 7);
    auto b = search_clique_minor(g, 7);
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) CHECK(parts_of(*a.witness) == parts_of(*b.witness));
}

TEST_CASE("an expired deadline times out a hard search")
{
    // The complement of the Petersen graph has h = 6; proving K_7 absent
    // takes a few thousand nodes, well past the first deadline check.
    auto g = complement(F::petersen());
    auto unbounded = search_clique_minor(g, 7);
    CHECK(unbounded.status == MinorStatus::Absent);
    CHECK(unbounded.nodes > 1024);

    MinorSearchOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    auto r = search_clique_minor(g, 7, opts);
    CHECK(r.status == MinorStatus::TimedOut);
    CHECK(!r.witness);
    CHECK(r.nodes == 1024);

    // An easy search finishes before the first check.
    auto easy = search_clique_minor(F::petersen(), 5, opts);
    CHECK(easy.status == MinorStatus::Found);
}
