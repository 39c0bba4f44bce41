#include "hadwiger/inflation.hpp"

namespace hadwiger {

VertexSet InflationPartition::all_parts() const
{
    VertexSet out;
    for (const auto& x : parts) out |= x;
    return out;
}

bool can_join_part(const Graph& g, const InflationPartition& p, int v, int i)
{
    const VertexSet& nv = g.neighbors(v);
    VertexSet must_see = p.part(i - 1) | p.part(i) | p.part(i + 1);
    VertexSet must_miss = p.part(i + 2) | p.part(i + 3);
    return must_see.is_subset_of(nv) && !must_miss.intersects(nv);
}

InflationPartition maximal_inflation(const Graph& g, const PatternWitness& seed)
{
    if (seed.kind != PatternKind::C5 || !validate_pattern_witness(g, seed))
        throw std::invalid_argument("seed is not a valid induced C5 witness");

    InflationPartition p;
    for (std::size_t i = 0; i < 5; ++i) p.parts[i].insert(seed.mapping[i]);
    p.rest = g.vertices() - p.all_parts();

    bool grew = true;
    while (grew) {
        grew = false;
        for (int v : p.rest) {
            for (int i = 0; i < 5 && !grew; ++i) {
                if (can_join_part(g, p, v, i)) {
                    p.parts[static_cast<std::size_t>(i)].insert(v);
                    p.rest.erase(v);
                    grew = true;
                }
            }
            if (grew) break;
        }
    }
    return p;
}

std::string to_string(InflationViolationKind k)
{
    switch (k) {
    case InflationViolationKind::EmptyPart: return "empty_part";
    case InflationViolationKind::PartNotClique: return "part_not_clique";
    case InflationViolationKind::NotCompleteToNeighbor: return "not_complete_to_neighbor";
    case InflationViolationKind::NotAnticompleteToNonNeighbor: return "not_anticomplete_to_non_neighbor";
    case InflationViolationKind::NotAPartition: return "not_a_partition";
    case InflationViolationKind::NotMaximal: return "not_maximal";
    }
    return "unknown";
}

InflationCheck verify_inflation(const Graph& g, const InflationPartition& p)
{
    InflationCheck check;
    auto report = [&](InflationViolationKind kind, int part, std::vector<int> vs) {
        check.ok = false;
        check.violations.push_back({kind, part, std::move(vs)});
    };

    VertexSet all = g.vertices();
    VertexSet seen;
    for (int i = 0; i < 5; ++i) {
        const VertexSet& x = p.part(i);
        if (!x.is_subset_of(all) || x.intersects(seen)) report(InflationViolationKind::NotAPartition, i, {});
        seen |= x;
    }
    if (!p.rest.is_subset_of(all) || p.rest.intersects(seen) || (seen | p.rest) != all)
        report(InflationViolationKind::NotAPartition, -1, {});
    if (!check.ok) return check;

    for (int i = 0; i < 5; ++i) {
        const VertexSet& x = p.part(i);
        if (x.empty()) report(InflationViolationKind::EmptyPart, i, {});
        if (auto [a, b] = find_non_edge(g, x); a >= 0) report(InflationViolationKind::PartNotClique, i, {a, b});
        for (int v : x) {
            VertexSet missing = p.part(i + 1) - g.neighbors(v);
            if (!missing.empty()) report(InflationViolationKind::NotCompleteToNeighbor, i, {v, missing.first()});
            VertexSet extra = p.part(i + 2) & g.neighbors(v);
            if (!extra.empty()) report(InflationViolationKind::NotAnticompleteToNonNeighbor, i, {v, extra.first()});
        }
    }

    for (int v : p.rest)
        for (int i = 0; i < 5; ++i)
            if (can_join_part(g, p, v, i)) report(InflationViolationKind::NotMaximal, i, {v});
    return check;
}

InflationPartition rotate(const InflationPartition& p, int shift)
{
    InflationPartition out;
    for (int i = 0; i < 5; ++i) out.parts[static_cast<std::size_t>(mod5(i + shift))] = p.part(i);
    out.rest = p.rest;
    return out;
}

}  // namespace hadwiger
