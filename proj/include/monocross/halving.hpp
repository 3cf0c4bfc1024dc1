#pragma once

#include <stdexcept>
#include <vector>

#include "monocross/coloring.hpp"
#include "monocross/geometry.hpp"

namespace monocross {

class TieAtPointError : public std::runtime_error {
public:
    explicit TieAtPointError(int point)
        : std::runtime_error("color classes tie at point " + std::to_string(point)),
          point_index(point) {}
    int point_index;
};

class OddCardinalityError : public std::runtime_error {
public:
    OddCardinalityError() : std::runtime_error("halving machinery requires an even point count") {}
};

struct LargerClass {
    Color cls;       // the color with strictly more incident edges at p
    int larger = 0;  // its count
    int smaller = 0;
};

// Throws TieAtPointError when both classes have equal size (odd m only).
LargerClass larger_class_at(const Drawing& d, const Coloring& chi, int p);

struct SideCounts {
    int large_left = 0;   // larger-class edges strictly left of the directed line
    int large_right = 0;
    int small_left = 0;
    int small_right = 0;
    int total() const { return large_left + large_right + small_left + small_right; }
};

struct HalvingCheck {
    bool halving = false;  // |large_left - large_right| <= 1
    SideCounts counts;
};

// Side counts at p relative to the line through edge e directed from the
// other endpoint toward p; e itself is excluded from all four counts.
HalvingCheck halving_side_counts(const Drawing& d, const Coloring& chi, int p, int e);
bool is_halving_edge(const Drawing& d, const Coloring& chi, int p, int e);

struct HalvingMatching {
    std::vector<int> match;  // point index -> incident edge index
};

struct MatchingSearch {
    bool found = false;
    HalvingMatching matching;  // valid only when found
    int max_matched = 0;       // size of the maximum point-edge matching
};

// Maximum bipartite matching between points and their halving edges
// (augmenting paths); found iff perfect on points. Of all perfect matchings
// the lexicographically least by (point index, edge index) is returned.
MatchingSearch find_halving_matching(const Drawing& d, const Coloring& chi);

// Re-check from scratch: totality, injectivity, incidence, halving per pair.
bool verify_halving_matching(const Drawing& d, const Coloring& chi,
                             const HalvingMatching& m);

}  // namespace monocross
