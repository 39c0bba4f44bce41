#pragma once

#include "hadwiger/detect.hpp"
#include "hadwiger/graph.hpp"
#include "hadwiger/minors.hpp"

namespace hadwiger {

/// Exact h, chi and n for an alpha = 2 graph, and whether
/// (h >= chi) <=> (h >= ceil(n/2)) holds.
struct Theorem2Report {
    int n = 0;
    int h = 0;
    int chi = 0;
    bool exact = true;  // false when the minor search ran out of budget
    bool h_at_least_chi = false;
    bool h_at_least_half = false;
    bool holds = false;
};

/// Throws PreconditionError unless independence_number(g) == 2.
Theorem2Report theorem2_check(const Graph& g, const MinorSearchOptions& options = {});

/// omega >= n/4 for even n, omega >= (n+3)/4 for odd n (compared as 4*omega).
bool seagull_condition(int n, int omega);
bool seagull_condition(const Graph& g);

/// Four times the seagull clique threshold: n for even n, n + 3 for odd n.
int seagull_threshold_x4(int n);

/// With alpha <= 2 the complement is triangle-free, so R(3,6) = 18 forces
/// n <= 17 when omega <= 5, and R(3,7) = 23 forces n <= 22 when omega <= 6.
/// False means a graph contradicting those Ramsey numbers.
bool remark6_check(int n, int omega);
bool remark6_check(const Graph& g);

inline constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace hadwiger
