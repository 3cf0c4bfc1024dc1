#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocross/geometry.hpp"

namespace monocross {

enum class Color : uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

// One color per canonical edge index.
using Coloring = std::vector<Color>;

std::string coloring_string(const Coloring& chi);  // "RBRB..."
Coloring coloring_from_string(const std::string& s);

enum class SearchMethod { LocalSearch, Annealing, Exact, Random };

struct ColoringResult {
    Coloring coloring;
    long long mono_count = 0;
    SearchMethod method = SearchMethod::Random;
    uint64_t seed = 0;
    int restarts_used = 0;
};

// Number of crossings whose two edges share a color.
long long mono_crossings(const Drawing& d, const Coloring& chi);
long long mono_crossings(const IntersectionGraph& g, const Coloring& chi);

// Independent fair coin per edge.
ColoringResult random_coloring(const Drawing& d, uint64_t seed);

// Multi-restart first-improvement single-flip local search. The result is a
// local optimum: no single edge flip decreases the monochromatic count.
ColoringResult local_search(const Drawing& d, uint64_t seed, int restarts = 1);
ColoringResult local_search(const IntersectionGraph& g, uint64_t seed, int restarts = 1,
                            const Coloring* warm_start = nullptr);

struct AnnealSchedule {
    double start_temp = -1.0;  // < 0: cr(D) / 10
    double cooling = 0.995;    // per sweep (one proposed flip per edge)
    double min_temp = 0.05;
    int max_sweeps = 4000;
    int restarts = 1;
};

// Simulated annealing with geometric cooling, polished by local search; the
// plain local-search result for the same seed is taken when it is better, so
// anneal never loses to it.
ColoringResult anneal(const Drawing& d, uint64_t seed, const AnnealSchedule& schedule = {});
ColoringResult anneal(const IntersectionGraph& g, uint64_t seed,
                      const AnnealSchedule& schedule = {});

struct ExactCr2Result {
    bool optimal = false;
    long long value = 0;        // best coloring found (== optimum when optimal)
    Coloring coloring;
    long long lower_bound = 0;  // proven bound; == value when optimal
    uint64_t nodes_used = 0;
};

// Branch and bound over edge colors: first branched edge fixed (color-swap
// symmetry), edges ordered by descending crossing degree, cheaper color
// first, pruned with a per-edge lookahead plus an odd-cycle packing bound on
// the uncolored residual. Reports [lower_bound, value] when the node budget
// runs out.
ExactCr2Result exact_cr2(const Drawing& d, uint64_t node_budget = 50'000'000);
ExactCr2Result exact_cr2(const IntersectionGraph& g, uint64_t node_budget = 50'000'000);

}  // namespace monocross
