#include "hadwiger/minors.hpp"

#include "hadwiger/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace hadwiger {

bool validate_minor_witness(const Graph& g, const MinorWitness& w)
{
    VertexSet seen;
    for (const auto& b : w.branch_sets) {
        if (b.empty() || !b.is_subset_of(g.vertices()) || b.intersects(seen)) return false;
        if (!is_connected(g, b)) return false;
        seen |= b;
    }
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
        VertexSet reach = neighborhood(g, w.branch_sets[i]);
        for (std::size_t j = i + 1; j < w.branch_sets.size(); ++j)
            if (!reach.intersects(w.branch_sets[j])) return false;
    }
    return true;
}

namespace {

    struct TimedOut {};

    /// Search inside one connected component, relabelled so that bit order
    /// equals pivot order.
    class BranchSetSearch {
    public:
        BranchSetSearch(const Graph& g, const VertexSet& component, const VertexSet& seed, int t,
                        const MinorSearchOptions& options, std::uint64_t& nodes)
            : t_(t), options_(options), nodes_(nodes)
        {
            order_ = (seed & component).to_vector();
            std::vector<int> rest = (component - seed).to_vector();
            std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
            order_.insert(order_.end(), rest.begin(), rest.end());
            m_ = static_cast<int>(order_.size());

            std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
            for (int i = 0; i < m_; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
            rows_.resize(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i)
                for (int u : g.neighbors(order_[static_cast<std::size_t>(i)]) & component)
                    rows_[static_cast<std::size_t>(i)].insert(pos[static_cast<std::size_t>(u)]);
        }

        std::optional<MinorWitness> run()
        {
            if (m_ < t_) return std::nullopt;
            parts_.clear();
            if (!search(-1, VertexSet{})) return std::nullopt;
            MinorWitness w;
            for (const auto& part : parts_) {
                VertexSet b;
                for (int i : part) b.insert(order_[static_cast<std::size_t>(i)]);
                w.branch_sets.push_back(b);
            }
            return w;
        }

    private:
        VertexSet above(int p) const
        {
            VertexSet s = VertexSet::prefix(m_);
            if (p >= 0) s -= VertexSet::prefix(p + 1);
            return s;
        }

        VertexSet nbhd(const VertexSet& s) const
        {
            VertexSet out;
            for (int v : s) out |= rows_[static_cast<std::size_t>(v)];
            return out;
        }

        void tick()
        {
            ++nodes_;
            if (options_.deadline && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *options_.deadline)
                throw TimedOut{};
        }

        bool touches_all_parts(const VertexSet& s) const
        {
            VertexSet reach = nbhd(s);
            for (const auto& part : parts_)
                if (!reach.intersects(part)) return false;
            return true;
        }

        /// Components of G[pool] that could host every remaining branch set:
        /// those sets are pairwise adjacent, so they share one component, and
        /// that component must touch every existing set.
        VertexSet viable_region(const VertexSet& pool, int need) const
        {
            VertexSet out;
            VertexSet left = pool;
            while (!left.empty()) {
                VertexSet comp;
                comp.insert(left.first());
                VertexSet frontier = comp;
                while (!frontier.empty()) {
                    VertexSet grown = nbhd(frontier) & left;
                    frontier = grown - comp;
                    comp |= grown;
                }
                left -= comp;
                if (comp.size() >= need && touches_all_parts(comp)) out |= comp;
            }
            return out;
        }

        bool search(int last_pivot, const VertexSet& used)
        {
            int need = t_ - static_cast<int>(parts_.size());
            if (need == 0) return true;
            tick();

            VertexSet pool = above(last_pivot) - used;
            if (pool.size() < need) return false;
            for (const auto& part : parts_)
                if ((nbhd(part) & pool).size() < need) return false;

            VertexSet region = viable_region(pool, need);
            for (int p : region) {
                VertexSet allowed = region & above(p - 1);
                // the component of p inside the still-allowed region
                VertexSet comp;
                comp.insert(p);
                VertexSet frontier = comp;
                while (!frontier.empty()) {
                    VertexSet grown = nbhd(frontier) & allowed;
                    frontier = grown - comp;
                    comp |= grown;
                }
                if (comp.size() < need) continue;

                int max_size = comp.size() - (need - 1);
                for (int size = 1; size <= max_size; ++size) {
                    VertexSet s;
                    s.insert(p);
                    VertexSet ext = rows_[static_cast<std::size_t>(p)] & comp;
                    ext.erase(p);
                    if (grow(s, 1, size, ext, VertexSet{}, comp, p, used)) return true;
                }
            }
            return false;
        }

        /// Enumerates each connected set of exactly `target` vertices that
        /// contains the pivot and lies in `allowed`, once.
        bool grow(VertexSet& s, int size, int target, VertexSet ext, VertexSet forbid, const VertexSet& allowed, int pivot,
                  const VertexSet& used)
        {
            if (size == target) {
                tick();
                if (!touches_all_parts(s)) return false;
                parts_.push_back(s);
                if (search(pivot, used | s)) return true;
                parts_.pop_back();
                return false;
            }
            VertexSet before;
            for (int v : ext) {
                VertexSet next_forbid = forbid | before;
                VertexSet next_ext = (ext | (rows_[static_cast<std::size_t>(v)] & allowed)) - s - next_forbid;
                next_ext.erase(v);
                s.insert(v);
                bool found = grow(s, size + 1, target, next_ext, next_forbid, allowed, pivot, used);
                s.erase(v);
                if (found) return true;
                before.insert(v);
            }
            return false;
        }

        int t_;
        const MinorSearchOptions& options_;
        std::uint64_t& nodes_;
        int m_ = 0;
        std::vector<int> order_;
        std::vector<VertexSet> rows_;
        std::vector<VertexSet> parts_;
    };

    MinorWitness singletons(const VertexSet& s)
    {
        MinorWitness w;
        for (int v : s) w.branch_sets.push_back(VertexSet{v});
        return w;
    }

    MinorSearchResult search_with_seed(const Graph& g, int t, const VertexSet& clique, const MinorSearchOptions& options)
    {
        MinorSearchResult result;
        if (t <= 0) {
            result.status = MinorStatus::Found;
            result.witness = MinorWitness{};
            return result;
        }
        if (t > g.order()) return result;
        if (clique.size() >= t) {
            VertexSet first_t;
            for (int v : clique) {
                if (first_t.size() == t) break;
                first_t.insert(v);
            }
            result.status = MinorStatus::Found;
            result.witness = singletons(first_t);
            return result;
        }
        try {
            for (const auto& comp : components(g, g.vertices())) {
                if (comp.size() < t) continue;
                BranchSetSearch search(g, comp, clique, t, options, result.nodes);
                if (auto w = search.run()) {
                    result.status = MinorStatus::Found;
                    result.witness = std::move(w);
                    return result;
                }
            }
        }
        catch (const TimedOut&) {
            result.status = MinorStatus::TimedOut;
            return result;
        }
        return result;
    }

}  // namespace

MinorSearchResult search_clique_minor(const Graph& g, int t, const MinorSearchOptions& options)
{
    return search_with_seed(g, t, maximum_clique(g), options);
}

std::optional<MinorWitness> has_clique_minor(const Graph& g, int t)
{
    return search_clique_minor(g, t).witness;
}

HadwigerResult hadwiger_number(const Graph& g, const MinorSearchOptions& options)
{
    VertexSet clique = maximum_clique(g);
    HadwigerResult out;
    out.h = clique.size();
    out.witness = singletons(clique);
    for (int t = out.h + 1; t <= g.order(); ++t) {
        auto r = search_with_seed(g, t, clique, options);
        if (r.status == MinorStatus::TimedOut) {
            out.exact = false;
            return out;
        }
        if (r.status == MinorStatus::Absent) return out;
        out.h = t;
        out.witness = std::move(*r.witness);
    }
    return out;
}

}  // namespace hadwiger
