#include "hadwiger/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace hadwiger {

namespace {

    using Cells = std::vector<std::vector<int>>;
    using Permutation = std::vector<int>;

    class Canonizer {
    public:
        explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

        CanonicalLabeling run()
        {
            Cells start;
            if (n_ > 0) {
                start.emplace_back(n_);
                std::iota(start[0].begin(), start[0].end(), 0);
            }
            refine(start);
            std::vector<int> prefix;
            explore(start, prefix);

            std::vector<int> pos(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(best_labeling_[static_cast<std::size_t>(i)])] = i;
            std::vector<Edge> edges;
            for (auto [u, v] : g_.edges()) edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
            return {Graph(n_, edges), best_labeling_};
        }

    private:
        /// Splits cells by neighbour counts into every cell until stable.
        void refine(Cells& cells) const
        {
            std::vector<int> cell_of(static_cast<std::size_t>(n_));
            while (true) {
                for (std::size_t c = 0; c < cells.size(); ++c)
                    for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

                bool changed = false;
                Cells next;
                next.reserve(cells.size());
                for (const auto& cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::vector<std::pair<std::vector<int>, int>> keyed;
                    keyed.reserve(cell.size());
                    for (int v : cell) {
                        std::vector<int> counts(cells.size(), 0);
                        for (int u : g_.neighbors(v)) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
                        keyed.emplace_back(std::move(counts), v);
                    }
                    std::sort(keyed.begin(), keyed.end());
                    std::size_t start = next.size();
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                        next.back().push_back(keyed[i].second);
                    }
                    if (next.size() - start > 1) changed = true;
                }
                cells = std::move(next);
                if (!changed) return;
            }
        }

        std::vector<std::uint64_t> certificate(const std::vector<int>& labeling) const
        {
            std::vector<std::uint64_t> bits((static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) / 2 + 63) / 64 + 1, 0);
            std::size_t k = 0;
            for (int j = 1; j < n_; ++j)
                for (int i = 0; i < j; ++i, ++k)
                    if (g_.adjacent(labeling[static_cast<std::size_t>(i)], labeling[static_cast<std::size_t>(j)]))
                        bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
            return bits;
        }

        int find(std::vector<int>& parent, int v) const
        {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        }

        /// Orbit representatives under the automorphisms found so far that
        /// fix every individualised vertex.
        std::vector<int> orbits_fixing(const std::vector<int>& prefix)
        {
            std::vector<int> parent(static_cast<std::size_t>(n_));
            std::iota(parent.begin(), parent.end(), 0);
            for (const auto& gamma : generators_) {
                bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                         [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
                if (!fixes) continue;
                for (int v = 0; v < n_; ++v) {
                    int a = find(parent, v);
                    int b = find(parent, gamma[static_cast<std::size_t>(v)]);
                    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                }
            }
            for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
            return parent;
        }

        void explore(const Cells& cells, std::vector<int>& prefix)
        {
            auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
            if (target == cells.end()) {
                std::vector<int> labeling;
                labeling.reserve(static_cast<std::size_t>(n_));
                for (const auto& c : cells) labeling.push_back(c[0]);
                leaf(labeling);
                return;
            }

            std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
            std::vector<int> candidates = *target;
            std::sort(candidates.begin(), candidates.end());
            std::vector<int> tried;
            for (int v : candidates) {
                auto orbit = orbits_fixing(prefix);
                bool covered = std::any_of(tried.begin(), tried.end(), [&](int u) {
                    return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
                });
                if (covered) continue;

                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (c != target_index) {
                        child.push_back(cells[c]);
                        continue;
                    }
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[c])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                }
                refine(child);
                prefix.push_back(v);
                explore(child, prefix);
                prefix.pop_back();
                tried.push_back(v);
            }
        }

        void leaf(const std::vector<int>& labeling)
        {
            auto cert = certificate(labeling);
            if (!first_cert_) {
                first_cert_ = cert;
                first_labeling_ = labeling;
            }
            else if (cert == *first_cert_) {
                record_automorphism(first_labeling_, labeling);
            }
            if (!best_cert_ || cert < *best_cert_) {
                best_cert_ = std::move(cert);
                best_labeling_ = labeling;
            }
            else if (cert == *best_cert_) {
                record_automorphism(best_labeling_, labeling);
            }
        }

        /// Equal certificates mean `from` and `to` relabel g identically, so
        /// from[i] -> to[i] is an automorphism.
        void record_automorphism(const std::vector<int>& from, const std::vector<int>& to)
        {
            Permutation gamma(static_cast<std::size_t>(n_));
            bool identity = true;
            for (int i = 0; i < n_; ++i) {
                gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
                if (from[static_cast<std::size_t>(i)] != to[static_cast<std::size_t>(i)]) identity = false;
            }
            if (!identity) generators_.push_back(std::move(gamma));
        }

        const Graph& g_;
        int n_;
        std::optional<std::vector<std::uint64_t>> first_cert_;
        std::vector<int> first_labeling_;
        std::optional<std::vector<std::uint64_t>> best_cert_;
        std::vector<int> best_labeling_;
        std::vector<Permutation> generators_;
    };

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

bool are_isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace hadwiger
