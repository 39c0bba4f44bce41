#include "hadwiger/graph6.hpp"

#include <cstdint>
#include <cstdio>

namespace hadwiger {

Graph parse_graph6(std::string_view text)
{
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 record");

    auto code = [](char c) { return static_cast<int>(static_cast<unsigned char>(c)); };
    int head = code(text[0]);
    if (head == 126) throw Graph6Error("long-form graph6 header (order > 62) is not supported");
    if (head < 63 || head > 126) throw Graph6Error("graph6 header character out of range");
    int n = head - 63;

    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::size_t chars = (bits + 5) / 6;
    if (text.size() != 1 + chars)
        throw Graph6Error("graph6 record for " + std::to_string(n) + " vertices needs " + std::to_string(chars) +
                          " data characters, got " + std::to_string(text.size() - 1));

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = code(text[1 + bit / 6]);
            if (c < 63 || c > 126) throw Graph6Error("graph6 data character out of range at offset " + std::to_string(1 + bit / 6));
            if (((c - 63) >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        int c = code(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 data character out of range at offset " + std::to_string(i));
    }
    if (bits % 6 != 0) {
        int last = code(text.back()) - 63;
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw Graph6Error("graph6 padding bits are not zero");
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g)
{
    int n = g.order();
    if (n > kGraph6MaxOrder) throw Graph6Error("order " + std::to_string(n) + " needs the long graph6 form");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::string fingerprint(const Graph& g)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (auto w : g.neighbors(v).words()) mix(w);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hadwiger
