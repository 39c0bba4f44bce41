#include "hadwiger/theorems.hpp"

#include "hadwiger/invariants.hpp"

namespace hadwiger {

Theorem2Report theorem2_check(const Graph& g, const MinorSearchOptions& options)
{
    if (independence_number(g) != 2) throw PreconditionError("theorem2_check needs independence number exactly 2");
    Theorem2Report r;
    r.n = g.order();
    r.chi = chromatic_number(g);
    auto h = hadwiger_number(g, options);
    r.h = h.h;
    r.exact = h.exact;
    r.h_at_least_chi = r.h >= r.chi;
    r.h_at_least_half = r.h >= ceil_div(r.n, 2);
    r.holds = r.h_at_least_chi == r.h_at_least_half;
    return r;
}

int seagull_threshold_x4(int n) { return n % 2 == 0 ? n : n + 3; }

bool seagull_condition(int n, int omega) { return 4 * omega >= seagull_threshold_x4(n); }

bool seagull_condition(const Graph& g) { return seagull_condition(g.order(), clique_number(g)); }

bool remark6_check(int n, int omega)
{
    if (omega <= 5 && n > 17) return false;
    if (omega <= 6 && n > 22) return false;
    return true;
}

bool remark6_check(const Graph& g) { return remark6_check(g.order(), clique_number(g)); }

}  // namespace hadwiger
