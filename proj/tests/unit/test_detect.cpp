#include "hadwiger/detect.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/generate.hpp"
#include "hadwiger/invariants.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hadwiger;
namespace F = hadwiger::families;

namespace {

// W5 with hub 0 and rim x_1..x_5 = 1..5, plus one extra vertex per entry of
// `missed`: it misses the hub and the listed rim vertices, sees the rest of
// the rim and every other extra vertex.
Graph wheel_with_extras(const std::vector<std::vector<int>>& missed)
{
    auto edges = F::wheel(5).edges();
    int n = 6 + static_cast<int>(missed.size());
    for (std::size_t a = 0; a < missed.size(); ++a) {
        int u = 6 + static_cast<int>(a);
        for (int r = 1; r <= 5; ++r)
            if (std::find(missed[a].begin(), missed[a].end(), r) == missed[a].end()) edges.emplace_back(r, u);
        for (std::size_t b = 0; b < a; ++b) edges.emplace_back(6 + static_cast<int>(b), u);
    }
    return Graph(n, edges);
}

const PatternWitness kWheel = make_witness(PatternKind::W5, {0, 1, 2, 3, 4, 5});

}  // namespace

TEST_CASE("pattern names round trip")
{
    for (auto k : {PatternKind::C5, PatternKind::W5, PatternKind::CoStar5, PatternKind::Independent3, PatternKind::Custom})
        CHECK(pattern_kind_from_string(to_string(k)) == k);
    CHECK(to_string(PatternKind::CoStar5) == "CO_STAR_5");
    CHECK_THROWS_AS(pattern_kind_from_string("W6"), std::invalid_argument);
}

TEST_CASE("pattern graphs")
{
    CHECK(pattern_graph(PatternKind::C5) == F::cycle(5));
    CHECK(pattern_graph(PatternKind::W5) == F::wheel(5));
    auto co = pattern_graph(PatternKind::CoStar5);
    CHECK(co.size() == 10);
    CHECK(co.degree(5) == 0);
    CHECK(pattern_graph(PatternKind::Independent3) == F::edgeless(3));
}

TEST_CASE("find_induced examples")
{
    auto c5 = F::cycle(5);
    auto id = find_induced(c5, c5, PatternKind::C5);
    REQUIRE(id);
    CHECK(id->mapping == std::vector<int>{0, 1, 2, 3, 4});

    auto rim = find_induced(F::wheel(5), PatternKind::C5);
    REQUIRE(rim);
    CHECK(rim->image() == VertexSet{1, 2, 3, 4, 5});
    CHECK(validate_pattern_witness(F::wheel(5), *rim));

    CHECK_FALSE(find_induced(F::house(), PatternKind::C5));
    CHECK_FALSE(oracle::has_induced(F::house(), F::cycle(5)));
}

TEST_CASE("patterns above eight vertices are refused")
{
    CHECK_THROWS_AS(find_induced(F::complete(12), F::complete(9)), std::invalid_argument);
    CHECK_NOTHROW(find_induced(F::complete(12), F::complete(8)));
}

TEST_CASE("validate_pattern_witness")
{
    auto c5 = F::cycle(5);
    CHECK(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 1, 2, 3, 4})));
    CHECK(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 4, 3, 2, 1})));
    CHECK_FALSE(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 2, 4, 1, 3})));
    CHECK_FALSE(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 1, 2, 3, 3})));
    CHECK_FALSE(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 1, 2, 3, 5})));
    CHECK_FALSE(validate_pattern_witness(c5, make_witness(PatternKind::C5, {0, 1, 2, 3})));
    PatternWitness lying{PatternKind::W5, F::cycle(5), {0, 1, 2, 3, 4}};  // kind/pattern mismatch
    CHECK_FALSE(validate_pattern_witness(c5, lying));
}

TEST_CASE("is_w5_free examples")
{
    auto w = is_w5_free(F::wheel(5));
    CHECK_FALSE(w.free);
    REQUIRE(w.witness);
    CHECK(w.witness->mapping == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(is_w5_free(F::cycle(5)).free);
    CHECK(is_w5_free(F::blown_up_c5({2, 1, 1, 1, 1})).free);
    CHECK_FALSE(oracle::has_induced(F::blown_up_c5({2, 1, 1, 1, 1}), F::wheel(5)));
}

TEST_CASE("dominating_edge examples")
{
    CHECK(dominating_edge(F::wheel(5)) == Edge{0, 1});
    CHECK_FALSE(dominating_edge(F::cycle(5)));
    CHECK(dominating_edge(F::complete(2)) == Edge{0, 1});
    CHECK_FALSE(dominating_edge(F::edgeless(2)));
    CHECK(is_dominating_edge(F::wheel(5), 0, 3));
    CHECK_FALSE(is_dominating_edge(F::wheel(5), 1, 3));  // not an edge
}

TEST_CASE("dominating_edge agrees with the oracle")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Edge> edges;
        int n = 2 + trial % 9;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) edges.emplace_back(u, v);
        Graph g(n, edges);
        auto expect = oracle::first_dominating_edge(g);
        auto got = dominating_edge(g);
        if (expect.first < 0)
            CHECK_FALSE(got);
        else
            CHECK(got == Edge{expect.first, expect.second});
        // an absent result means every edge leaves some vertex undominated
        if (!got)
            for (auto [x, y] : g.edges()) CHECK_FALSE(oracle::dominates(g, x, y));
    }
}

TEST_CASE("find_independent_triple")
{
    CHECK_FALSE(find_independent_triple(F::cycle(5)));
    auto t = find_independent_triple(F::cycle(6));
    REQUIRE(t);
    CHECK(t->mapping == std::vector<int>{0, 2, 4});
    CHECK(validate_pattern_witness(F::cycle(6), *t));
}

TEST_CASE("w5_on")
{
    auto g = F::add_vertex(F::wheel(5), VertexSet{0});
    auto w = w5_on(g, VertexSet{0, 1, 2, 3, 4, 5});
    REQUIRE(w);
    CHECK(validate_pattern_witness(g, *w));
    CHECK(w->mapping[0] == 0);
    CHECK_FALSE(w5_on(g, VertexSet{0, 1, 2, 3, 4, 6}));
    CHECK_FALSE(w5_on(g, VertexSet{0, 1, 2}));
}

TEST_CASE("induced search matches the oracle on every graph up to 8 vertices")
{
    const Graph& c5 = pattern_graph(PatternKind::C5);
    const Graph& w5 = pattern_graph(PatternKind::W5);
    const Graph& co = pattern_graph(PatternKind::CoStar5);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : enumerate_all_graphs(n)) {
            for (const Graph* p : {&c5, &w5, &co}) {
                auto got = find_induced(g, *p);
                CHECK(got.has_value() == oracle::has_induced(g, *p));
                if (got) CHECK(oracle::faithful(g, *p, got->mapping));
            }
        }
    }
}

TEST_CASE("custom patterns match the oracle on random hosts")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + trial % 4, k = 3 + trial % 4;
        std::vector<Edge> he, pe;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) he.emplace_back(u, v);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                if (rng() % 2) pe.emplace_back(u, v);
        Graph host(n, he), pattern(k, pe);
        auto got = find_induced(host, pattern);
        CHECK(got.has_value() == oracle::has_induced(host, pattern));
        if (got) CHECK(oracle::faithful(host, pattern, got->mapping));
    }
}

TEST_CASE("corollary 7 on W5 returns the first hub-rim edge")
{
    auto r = corollary7_witness(F::wheel(5), kWheel);
    CHECK(r.kind == Cor7Kind::DominatingEdge);
    CHECK(r.edge == Edge{0, 1});
    CHECK_FALSE(r.witness);
}

TEST_CASE("corollary 7 on W5 plus a universal vertex")
{
    auto g = F::add_universal_vertex(F::wheel(5));
    auto r = corollary7_witness(g, kWheel);
    CHECK(r.kind == Cor7Kind::DominatingEdge);
    REQUIRE(r.edge);
    CHECK(oracle::dominates(g, r.edge->first, r.edge->second));
}

TEST_CASE("corollary 7 on the 11-vertex instance")
{
    // y_i = 5 + i misses x_i and the hub, sees the other rim vertices and all y_j
    auto g = wheel_with_extras({{1}, {2}, {3}, {4}, {5}});
    REQUIRE(g.order() == 11);
    CHECK(oracle::alpha(g) == 2);
    for (int x = 1; x <= 5; ++x) CHECK_FALSE(oracle::dominates(g, 0, x));
    // edges x_i y_{i+1} and x_i y_{i-1} do dominate; only hub-rim edges matter here
    std::vector<std::pair<int, int>> dominating;
    for (int a = 0; a < 11; ++a)
        for (int b = a + 1; b < 11; ++b)
            if (oracle::dominates(g, a, b)) dominating.emplace_back(a, b);
    CHECK(dominating == std::vector<std::pair<int, int>>{{1, 7}, {1, 10}, {2, 6}, {2, 8}, {3, 7}, {3, 9}, {4, 8}, {4, 10}, {5, 6}, {5, 9}});

    auto r = corollary7_witness(g, kWheel);
    REQUIRE(r.kind == Cor7Kind::CoStarWitness);
    CHECK_FALSE(r.edge);
    REQUIRE(r.witness);
    CHECK(r.witness->kind == PatternKind::CoStar5);
    CHECK(r.witness->mapping == std::vector<int>{6, 7, 8, 9, 10, 0});
    CHECK(validate_pattern_witness(g, *r.witness));
    auto sub = induced_subgraph(g, r.witness->image()).graph;
    CHECK(find_induced(sub, PatternKind::CoStar5).has_value());
}

TEST_CASE("corollary 7 picks distinct representatives when the lowest picks collide")
{
    // vertex 6 misses x_1 and x_2; vertex 7 misses x_1 only
    auto g = wheel_with_extras({{1, 2}, {1}, {3}, {4}, {5}});
    REQUIRE(oracle::alpha(g) == 2);
    auto r = corollary7_witness(g, kWheel);
    REQUIRE(r.kind == Cor7Kind::CoStarWitness);
    CHECK(r.witness->mapping == std::vector<int>{7, 6, 8, 9, 10, 0});
    CHECK(validate_pattern_witness(g, *r.witness));
}

TEST_CASE("corollary 7 reports two rim vertices sharing their only candidate")
{
    auto g = wheel_with_extras({{1, 2}, {3}, {4}, {5}});
    REQUIRE(oracle::alpha(g) == 2);
    for (int x = 1; x <= 5; ++x) REQUIRE_FALSE(oracle::dominates(g, 0, x));
    try {
        corollary7_witness(g, kWheel);
        FAIL("expected a construction error");
    }
    catch (const ConstructionError& e) {
        CHECK(e.pair() == Edge{1, 2});
    }
}

TEST_CASE("corollary 7 preconditions")
{
    auto g = F::add_vertex(F::wheel(5), VertexSet{});  // isolated vertex: alpha = 3
    CHECK_THROWS_AS(corollary7_witness(g, kWheel), PreconditionError);
    CHECK_THROWS_AS(corollary7_witness(F::wheel(5), make_witness(PatternKind::W5, {1, 0, 2, 3, 4, 5})), PreconditionError);
    CHECK_THROWS_AS(corollary7_witness(F::wheel(5), make_witness(PatternKind::C5, {1, 2, 3, 4, 5})), PreconditionError);
}

TEST_CASE("corollary 7 never fails silently on random alpha <= 2 hosts")
{
    int witnessed = 0;
    for (std::uint64_t s = 0; s < 3000; ++s) {
        auto g = random_alpha2(9 + static_cast<int>(s % 6), s);
        auto w5 = is_w5_free(g);
        if (w5.free) continue;
        ++witnessed;
        try {
            auto r = corollary7_witness(g, *w5.witness);
            if (r.kind == Cor7Kind::DominatingEdge) {
                REQUIRE(r.edge);
                CHECK_FALSE(r.witness);
                CHECK(oracle::dominates(g, r.edge->first, r.edge->second));
            }
            else {
                REQUIRE(r.witness);
                CHECK_FALSE(r.edge);
                CHECK(validate_pattern_witness(g, *r.witness));
            }
        }
        catch (const ConstructionError& e) {
            CHECK(e.pair().first >= 0);
            CHECK(e.pair().second >= 0);
        }
    }
    CHECK(witnessed > 100);
}
