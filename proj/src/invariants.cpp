#include "hadwiger/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hadwiger {

namespace {

    /// Bitset branch and bound for maximum clique with greedy colouring
    /// bounds. Vertices are renumbered so bit order equals search order.
    class CliqueSearch {
    public:
        explicit CliqueSearch(const Graph& g) : n_(g.order())
        {
            order_.resize(static_cast<std::size_t>(n_));
            std::iota(order_.begin(), order_.end(), 0);
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
            std::vector<int> pos(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
            rows_.resize(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                for (int u : g.neighbors(order_[static_cast<std::size_t>(i)])) rows_[static_cast<std::size_t>(i)].insert(pos[static_cast<std::size_t>(u)]);
        }

        VertexSet run()
        {
            VertexSet current;
            expand(current, 0, VertexSet::prefix(n_));
            VertexSet out;
            for (int i : best_) out.insert(order_[static_cast<std::size_t>(i)]);
            return out;
        }

    private:
        void expand(VertexSet& current, int current_size, VertexSet candidates)
        {
            std::vector<int> verts;
            std::vector<int> bounds;
            colour_sort(candidates, best_size_ - current_size + 1, verts, bounds);
            for (std::size_t k = verts.size(); k-- > 0;) {
                if (current_size + bounds[k] <= best_size_) return;
                int v = verts[k];
                current.insert(v);
                VertexSet next = candidates & rows_[static_cast<std::size_t>(v)];
                if (next.empty()) {
                    if (current_size + 1 > best_size_) {
                        best_size_ = current_size + 1;
                        best_ = current;
                    }
                }
                else {
                    expand(current, current_size + 1, next);
                }
                current.erase(v);
                candidates.erase(v);
            }
        }

        void colour_sort(VertexSet uncoloured, int min_colour, std::vector<int>& verts, std::vector<int>& bounds) const
        {
            int colour = 0;
            while (!uncoloured.empty()) {
                ++colour;
                VertexSet q = uncoloured;
                while (!q.empty()) {
                    int v = q.first();
                    uncoloured.erase(v);
                    q.erase(v);
                    q -= rows_[static_cast<std::size_t>(v)];
                    if (colour >= min_colour) {
                        verts.push_back(v);
                        bounds.push_back(colour);
                    }
                }
            }
        }

        int n_;
        std::vector<int> order_;
        std::vector<VertexSet> rows_;
        VertexSet best_;
        int best_size_ = 0;
    };

    /// Edmonds' blossom algorithm, one BFS per exposed vertex.
    class BlossomMatcher {
    public:
        explicit BlossomMatcher(const Graph& g)
            : g_(g), n_(g.order()), match_(static_cast<std::size_t>(n_), -1), parent_(static_cast<std::size_t>(n_)),
              base_(static_cast<std::size_t>(n_))
        {
        }

        std::vector<Edge> run()
        {
            for (int root = 0; root < n_; ++root)
                if (match_[idx(root)] < 0) augment_from(root);
            std::vector<Edge> out;
            for (int v = 0; v < n_; ++v)
                if (match_[idx(v)] > v) out.emplace_back(v, match_[idx(v)]);
            return out;
        }

    private:
        static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

        int lowest_common_ancestor(int a, int b) const
        {
            std::vector<char> seen(idx(n_), 0);
            while (true) {
                a = base_[idx(a)];
                seen[idx(a)] = 1;
                if (match_[idx(a)] < 0) break;
                a = parent_[idx(match_[idx(a)])];
            }
            while (true) {
                b = base_[idx(b)];
                if (seen[idx(b)]) return b;
                b = parent_[idx(match_[idx(b)])];
            }
        }

        void mark_path(std::vector<char>& in_blossom, int v, int b, int child)
        {
            while (base_[idx(v)] != b) {
                in_blossom[idx(base_[idx(v)])] = 1;
                in_blossom[idx(base_[idx(match_[idx(v)])])] = 1;
                parent_[idx(v)] = child;
                child = match_[idx(v)];
                v = parent_[idx(match_[idx(v)])];
            }
        }

        void augment_from(int root)
        {
            std::vector<char> used(idx(n_), 0);
            std::fill(parent_.begin(), parent_.end(), -1);
            std::iota(base_.begin(), base_.end(), 0);
            std::deque<int> queue{root};
            used[idx(root)] = 1;

            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int to : g_.neighbors(v)) {
                    if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
                    if (to == root || (match_[idx(to)] >= 0 && parent_[idx(match_[idx(to)])] >= 0)) {
                        int b = lowest_common_ancestor(v, to);
                        std::vector<char> in_blossom(idx(n_), 0);
                        mark_path(in_blossom, v, b, to);
                        mark_path(in_blossom, to, b, v);
                        for (int i = 0; i < n_; ++i) {
                            if (in_blossom[idx(base_[idx(i)])]) {
                                base_[idx(i)] = b;
                                if (!used[idx(i)]) {
                                    used[idx(i)] = 1;
                                    queue.push_back(i);
                                }
                            }
                        }
                    }
                    else if (parent_[idx(to)] < 0) {
                        parent_[idx(to)] = v;
                        if (match_[idx(to)] < 0) {
                            flip(to);
                            return;
                        }
                        used[idx(match_[idx(to)])] = 1;
                        queue.push_back(match_[idx(to)]);
                    }
                }
            }
        }

        void flip(int v)
        {
            while (v >= 0) {
                int pv = parent_[idx(v)];
                int next = match_[idx(pv)];
                match_[idx(v)] = pv;
                match_[idx(pv)] = v;
                v = next;
            }
        }

        const Graph& g_;
        int n_;
        std::vector<int> match_;
        std::vector<int> parent_;
        std::vector<int> base_;
    };

    class DsaturSearch {
    public:
        explicit DsaturSearch(const Graph& g)
            : g_(g), n_(g.order()), colour_(idx(n_), -1),
              neighbour_colour_count_(idx(n_), std::vector<int>(idx(n_) + 1, 0)), saturation_(idx(n_), 0)
        {
        }

        Coloring run()
        {
            best_ = greedy();
            if (n_ == 0) return best_;
            VertexSet clique = maximum_clique(g_);
            lower_bound_ = clique.size();
            if (best_.colors == lower_bound_) return best_;

            int c = 0;
            for (int v : clique) assign(v, c++);
            search(static_cast<int>(clique.size()), c);
            return best_;
        }

    private:
        static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

        Coloring greedy() const
        {
            Coloring out;
            out.color.assign(idx(n_), -1);
            std::vector<VertexSet> seen(idx(n_));
            for (int step = 0; step < n_; ++step) {
                int pick = -1;
                for (int v = 0; v < n_; ++v) {
                    if (out.color[idx(v)] >= 0) continue;
                    if (pick < 0 || seen[idx(v)].size() > seen[idx(pick)].size() ||
                        (seen[idx(v)].size() == seen[idx(pick)].size() && g_.degree(v) > g_.degree(pick)))
                        pick = v;
                }
                int c = 0;
                while (seen[idx(pick)].contains(c)) ++c;
                out.color[idx(pick)] = c;
                out.colors = std::max(out.colors, c + 1);
                for (int u : g_.neighbors(pick)) seen[idx(u)].insert(c);
            }
            return out;
        }

        void assign(int v, int c)
        {
            colour_[idx(v)] = c;
            for (int u : g_.neighbors(v))
                if (neighbour_colour_count_[idx(u)][idx(c)]++ == 0) ++saturation_[idx(u)];
        }

        void unassign(int v)
        {
            int c = colour_[idx(v)];
            colour_[idx(v)] = -1;
            for (int u : g_.neighbors(v))
                if (--neighbour_colour_count_[idx(u)][idx(c)] == 0) --saturation_[idx(u)];
        }

        int pick_vertex() const
        {
            int pick = -1;
            int pick_uncoloured_degree = -1;
            for (int v = 0; v < n_; ++v) {
                if (colour_[idx(v)] >= 0) continue;
                int ud = 0;
                for (int u : g_.neighbors(v))
                    if (colour_[idx(u)] < 0) ++ud;
                if (pick < 0 || saturation_[idx(v)] > saturation_[idx(pick)] ||
                    (saturation_[idx(v)] == saturation_[idx(pick)] && ud > pick_uncoloured_degree)) {
                    pick = v;
                    pick_uncoloured_degree = ud;
                }
            }
            return pick;
        }

        void search(int coloured, int used_colours)
        {
            if (best_.colors == lower_bound_) return;
            if (coloured == n_) {
                best_.colors = used_colours;
                best_.color = colour_;
                return;
            }
            int v = pick_vertex();
            int limit = std::min(used_colours, best_.colors - 2);
            for (int c = 0; c <= limit; ++c) {
                if (neighbour_colour_count_[idx(v)][idx(c)] > 0) continue;
                assign(v, c);
                search(coloured + 1, std::max(used_colours, c + 1));
                unassign(v);
                if (best_.colors == lower_bound_) return;
            }
        }

        const Graph& g_;
        int n_;
        std::vector<int> colour_;
        std::vector<std::vector<int>> neighbour_colour_count_;
        std::vector<int> saturation_;
        Coloring best_;
        int lower_bound_ = 0;
    };

}  // namespace

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }
VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }
int clique_number(const Graph& g) { return maximum_clique(g).size(); }
int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

std::vector<Edge> maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }
int max_matching(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        int cv = c.color[static_cast<std::size_t>(v)];
        if (cv < 0 || cv >= c.colors) return false;
        for (int u : g.neighbors(v))
            if (c.color[static_cast<std::size_t>(u)] == cv) return false;
    }
    return true;
}

Coloring chromatic_coloring_branch_and_bound(const Graph& g) { return DsaturSearch(g).run(); }

Coloring chromatic_coloring_by_matching(const Graph& g)
{
    if (independence_number(g) > 2) throw std::domain_error("matching route needs independence number at most 2");
    auto pairs = maximum_matching(complement(g));
    Coloring out;
    out.color.assign(static_cast<std::size_t>(g.order()), -1);
    for (auto [u, v] : pairs) {
        out.color[static_cast<std::size_t>(u)] = out.colors;
        out.color[static_cast<std::size_t>(v)] = out.colors;
        ++out.colors;
    }
    for (auto& c : out.color)
        if (c < 0) c = out.colors++;
    return out;
}

Coloring chromatic_coloring(const Graph& g)
{
    if (independence_number(g) <= 2) return chromatic_coloring_by_matching(g);
    return chromatic_coloring_branch_and_bound(g);
}

int chromatic_number(const Graph& g) { return chromatic_coloring(g).colors; }

InvariantReport compute_invariants(const Graph& g)
{
    return {g.order(), independence_number(g), clique_number(g), chromatic_number(g)};
}

}  // namespace hadwiger
