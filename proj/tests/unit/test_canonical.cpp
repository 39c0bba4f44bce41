#include "hadwiger/canonical.hpp"
#include "hadwiger/families.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace hadwiger;
namespace F = hadwiger::families;

namespace {

// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), edges);
}

std::vector<int> shuffled(int n, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Graph rook_4x4()
{
    std::vector<Edge> edges;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
    return Graph(16, edges);
}

Graph shrikhande()
{
    std::vector<Edge> edges;
    auto id = [](int x, int y) { return ((x + 4) % 4) * 4 + (y + 4) % 4; };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {1, 1}}) edges.emplace_back(id(x, y), id(x + dx, y + dy));
    return Graph(16, edges);
}

Graph prism(int k)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph(2 * k, edges);
}

}  // namespace

TEST_CASE("canonical labelling is a relabelling of the input")
{
    for (const auto& g : {F::petersen(), F::cycle(7), F::wheel(5), F::blown_up_c5({1, 2, 3, 1, 2}), shrikhande()}) {
        auto c = canonical_labeling(g);
        auto order = c.order;
        std::sort(order.begin(), order.end());
        std::vector<int> ids(static_cast<std::size_t>(g.order()));
        std::iota(ids.begin(), ids.end(), 0);
        REQUIRE(order == ids);
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                CHECK(c.graph.adjacent(i, j) == g.adjacent(c.order[static_cast<std::size_t>(i)], c.order[static_cast<std::size_t>(j)]));
        CHECK(canonical_form(g) == c.graph);
    }
}

TEST_CASE("canonical form is invariant under random relabelling")
{
    std::mt19937_64 rng(5);
    const Graph graphs[] = {F::petersen(), complement(F::petersen()), rook_4x4(), shrikhande(), prism(5),
                            F::blown_up_c5({2, 2, 2, 2, 2}), F::cycle(12), F::edgeless(6), F::complete(6)};
    for (const auto& g : graphs) {
        auto c = canonical_form(g);
        for (int rep = 0; rep < 20; ++rep) {
            auto h = relabel(g, shuffled(g.order(), rng));
            CHECK(canonical_form(h) == c);
            CHECK(are_isomorphic(g, h));
        }
    }
}

TEST_CASE("non-isomorphic look-alikes are told apart")
{
    // Same degree sequences, different graphs.
    CHECK_FALSE(are_isomorphic(rook_4x4(), shrikhande()));
    CHECK_FALSE(are_isomorphic(F::petersen(), prism(5)));
    std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    CHECK_FALSE(are_isomorphic(F::cycle(6), Graph(6, two_triangles)));
    CHECK_FALSE(are_isomorphic(F::cycle(5), F::cycle(6)));
}

TEST_CASE("canonical forms split all labelled graphs on 6 vertices like the oracle")
{
    const int n = 6;
    const int pairs = n * (n - 1) / 2;
    std::map<std::uint64_t, Graph> by_key;
    std::map<std::string, std::uint64_t> key_of_form;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        auto g = oracle::from_bits(n, bits);
        auto key = oracle::canonical_key(g);
        auto form = canonical_form(g);
        std::string s;
        for (auto [u, v] : form.edges()) s += std::to_string(u) + "-" + std::to_string(v) + ",";
        auto it = key_of_form.emplace(s, key).first;
        CHECK(it->second == key);  // same form, same class
        auto jt = by_key.emplace(key, form).first;
        CHECK(jt->second == form);  // same class, same form
    }
    // distinct classes never share a form
    CHECK(key_of_form.size() == by_key.size());
    CHECK(by_key.size() == 156);
}

TEST_CASE("canonical form on degenerate orders")
{
    CHECK(canonical_form(Graph(0)).order() == 0);
    CHECK(canonical_form(Graph(1)) == Graph(1));
    CHECK(are_isomorphic(Graph(2, {{0, 1}}), Graph(2, {{1, 0}})));
    CHECK_FALSE(are_isomorphic(Graph(2), Graph(3)));
}
