#pragma once

#include <cstdint>

#include "monocross/coloring.hpp"
#include "monocross/geometry.hpp"
#include "monocross/rational.hpp"

namespace monocross {

// n integer points in convex position (parabola arc), n >= 3.
Drawing convex_drawing(int n);

// 2-page crossing number of K_n:
// floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2) / 4.
// Equals cr2 of the convex drawing.
BigInt two_page_optimum(int n);

// Two facing convex chains of n points each, edges only between chains.
// Every upper pair + lower pair quadruple crosses exactly once, so the
// drawing has C(n,2)^2 crossings.
struct DoubleChain {
    int n = 0;
    Drawing drawing;  // points 0..n-1 upper (left to right), n..2n-1 lower
};

DoubleChain double_chain(int n);

// Chain-rank coloring: edge (upper i, lower j) is blue for i < j, red for
// i > j and red on ties. Monochromatic fraction tends to 1/3.
Coloring double_chain_coloring(const DoubleChain& dc);

// Random integer points in general position; deterministic per seed.
Drawing random_drawing(int n, uint64_t seed, int64_t coord_range = 1 << 16);

struct RatioReport {
    BigInt cr = 0;
    BigInt cr2_best = 0;
    bool cr2_exact = false;  // false: heuristic upper bound only
    bool crossing_free = false;
    Rational ratio;          // cr2_best / cr, 0 when crossing free
};

// cr2 via the exact solver when the drawing is small enough for the effort
// budget, otherwise the best heuristic value (flagged).
RatioReport ratio_report(const Drawing& d, int effort = 2);

}  // namespace monocross
