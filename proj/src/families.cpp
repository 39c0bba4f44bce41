#include "hadwiger/families.hpp"

namespace hadwiger::families {

Graph complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n)
{
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle(int n)
{
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph wheel(int rim)
{
    if (rim < 3) throw GraphError("a wheel needs a rim of at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(0, i + 1);
        e.emplace_back(i + 1, (i + 1) % rim + 1);
    }
    return Graph(rim + 1, e);
}

Graph octahedron()
{
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) e.emplace_back(u, v);
    return Graph(6, e);
}

Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spoke
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, e);
}

Graph house()
{
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}

Graph blown_up_c5(const std::array<int, 5>& sizes)
{
    std::array<int, 6> start{};
    for (int i = 0; i < 5; ++i) {
        if (sizes[static_cast<std::size_t>(i)] < 1) throw GraphError("blow-up classes must be nonempty");
        start[static_cast<std::size_t>(i + 1)] = start[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(i)];
    }
    int n = start[5];
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int i = 0; i < 5; ++i)
        for (int v = start[static_cast<std::size_t>(i)]; v < start[static_cast<std::size_t>(i + 1)]; ++v) cls[static_cast<std::size_t>(v)] = i;

    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = (cls[static_cast<std::size_t>(v)] - cls[static_cast<std::size_t>(u)] + 5) % 5;
            if (d == 0 || d == 1 || d == 4) e.emplace_back(u, v);
        }
    return Graph(n, e);
}

Graph add_vertex(const Graph& g, const VertexSet& neighbors)
{
    g.require_subset(neighbors);
    auto e = g.edges();
    for (int u : neighbors) e.emplace_back(u, g.order());
    return Graph(g.order() + 1, e);
}

Graph add_universal_vertex(const Graph& g) { return add_vertex(g, g.vertices()); }

}  // namespace hadwiger::families
