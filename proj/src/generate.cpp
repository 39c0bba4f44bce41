#include "hadwiger/generate.hpp"

#include "hadwiger/canonical.hpp"
#include "hadwiger/graph6.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hadwiger {

namespace {

    /// Extends every class on n-1 vertices by one vertex whose neighbourhood
    /// passes `allowed`, keyed by canonical graph6 to drop isomorphs.
    std::vector<Graph> extend_level(const std::vector<Graph>& parents, int n,
                                    const std::function<bool(const Graph&, const VertexSet&)>& allowed)
    {
        std::map<std::string, Graph> children;
        for (const auto& parent : parents) {
            int m = parent.order();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                VertexSet nbrs;
                for (int v = 0; v < m; ++v)
                    if ((mask >> v) & 1u) nbrs.insert(v);
                if (!allowed(parent, nbrs)) continue;
                auto e = parent.edges();
                for (int v : nbrs) e.emplace_back(v, m);
                Graph child = canonical_form(Graph(n, e));
                children.try_emplace(emit_graph6(child), std::move(child));
            }
        }
        std::vector<Graph> out;
        out.reserve(children.size());
        for (auto& [key, g] : children) out.push_back(std::move(g));
        return out;
    }

    std::vector<Graph> enumerate_hereditary(int n, const std::function<bool(const Graph&, const VertexSet&)>& allowed)
    {
        std::vector<Graph> level{Graph(0)};
        for (int k = 1; k <= n; ++k) level = extend_level(level, k, allowed);
        return level;
    }

    std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
    {
        std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return x % bound;
    }

}  // namespace

std::vector<Graph> enumerate_triangle_free(int n)
{
    if (n < 0 || n > kMaxExhaustiveOrder)
        throw std::invalid_argument("exhaustive enumeration supports 0.." + std::to_string(kMaxExhaustiveOrder) + " vertices");
    return enumerate_hereditary(n, [](const Graph& g, const VertexSet& nbrs) { return is_independent(g, nbrs); });
}

std::vector<Graph> enumerate_alpha2(int n)
{
    auto out = enumerate_triangle_free(n);
    for (auto& g : out) g = complement(g);
    return out;
}

std::vector<Graph> enumerate_all_graphs(int n)
{
    if (n < 0 || n > 8) throw std::invalid_argument("enumeration of all graphs supports 0..8 vertices");
    return enumerate_hereditary(n, [](const Graph&, const VertexSet&) { return true; });
}

Graph random_alpha2(int n, std::uint64_t seed)
{
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_alpha2 needs 1.." + std::to_string(kMaxVertices) + " vertices");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::mt19937_64 rng(seed);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[bounded(rng, i)]);

    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (auto [u, v] : pairs) {
        if (rows[static_cast<std::size_t>(u)].intersects(rows[static_cast<std::size_t>(v)])) continue;
        rows[static_cast<std::size_t>(u)].insert(v);
        rows[static_cast<std::size_t>(v)].insert(u);
    }
    return complement(Graph::from_rows(std::move(rows)));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i)
{
    std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void CorpusSpec::validate() const
{
    if (n < 0) throw std::invalid_argument("corpus order must be nonnegative");
    if (mode == CorpusMode::Exhaustive && n > kMaxExhaustiveOrder)
        throw std::invalid_argument("exhaustive corpora are limited to n <= " + std::to_string(kMaxExhaustiveOrder));
    if (mode == CorpusMode::Random && (samples < 1 || n < 1))
        throw std::invalid_argument("random corpora need n >= 1 and samples >= 1");
}

namespace {
    template <class T>
    T parse_number(const std::string& key, const std::string& value)
    {
        T out{};
        int base = 10;
        std::string_view digits = value;
        if (digits.starts_with("0x") || digits.starts_with("0X")) {
            base = 16;
            digits.remove_prefix(2);
        }
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out, base);
        if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("bad value for corpus field '" + key + "': '" + value + "'");
        return out;
    }
}

CorpusSpec parse_corpus_spec(const std::string& text)
{
    CorpusSpec spec;
    bool have_n = false;
    bool mode_given = false;
    bool random_hint = false;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("corpus field '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "n") {
            spec.n = parse_number<int>(key, value);
            have_n = true;
        }
        else if (key == "samples") {
            spec.samples = parse_number<int>(key, value);
            random_hint = true;
        }
        else if (key == "seed") {
            spec.seed = parse_number<std::uint64_t>(key, value);
            random_hint = true;
        }
        else if (key == "mode") {
            mode_given = true;
            if (value == "exhaustive")
                spec.mode = CorpusMode::Exhaustive;
            else if (value == "random")
                spec.mode = CorpusMode::Random;
            else
                throw std::invalid_argument("unknown corpus mode '" + value + "'");
        }
        else {
            throw std::invalid_argument("unknown corpus field '" + key + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("corpus spec needs n=N");
    if (!mode_given && random_hint) spec.mode = CorpusMode::Random;
    spec.validate();
    return spec;
}

void for_each_in_corpus(const CorpusSpec& spec, const std::function<void(const Graph&, std::uint64_t, std::uint64_t)>& sink)
{
    spec.validate();
    if (spec.mode == CorpusMode::Exhaustive) {
        auto all = enumerate_alpha2(spec.n);
        for (std::size_t i = 0; i < all.size(); ++i) sink(all[i], i, 0);
        return;
    }
    for (int i = 0; i < spec.samples; ++i) {
        auto s = sample_seed(spec.seed, static_cast<std::uint64_t>(i));
        sink(random_alpha2(spec.n, s), static_cast<std::uint64_t>(i), s);
    }
}

}  // namespace hadwiger
