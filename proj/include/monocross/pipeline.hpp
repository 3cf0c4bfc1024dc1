#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monocross/coloring.hpp"
#include "monocross/duplication.hpp"
#include "monocross/geometry.hpp"
#include "monocross/io.hpp"
#include "monocross/rational.hpp"

namespace monocross {

struct ImproveOptions {
    int iterations = 400;
    uint64_t seed = 1;
    int restarts = 8;          // coloring re-optimization per move
    bool accept_equal = true;  // walk across cr2 plateaus (tie-broken by cr)
};

struct ImproveResult {
    Drawing drawing;
    Coloring coloring;
    long long cr2 = 0;
    long long cr = 0;
    int accepted_moves = 0;
};

// Stage (1) of the search pipeline: random single-point perturbations,
// re-optimizing the coloring after each move, keeping (cr2, cr)-improvements.
ImproveResult improve_drawing(const Drawing& d, const Coloring* warm, const ImproveOptions& opts);

struct PipelineOptions {
    int target_n = 0;    // 0: keep the seed size
    int budget = 4;      // outer improve/enlarge/extract rounds
    uint64_t seed = 1;
    int improve_iterations = 400;
    int restarts = 8;
};

struct PipelineResult {
    Drawing drawing;               // best member (by constant when available)
    Coloring coloring;
    long long cr2 = 0;
    std::optional<Rational> constant;          // 24A/m^4 of the best member
    std::vector<Rational> constant_history;    // best-so-far after each evaluation
    Drawing min_cr2_drawing;       // member of target size with the fewest
    Coloring min_cr2_coloring;     // monochromatic crossings seen
    long long min_cr2 = -1;
    std::vector<std::string> warnings;
    int rounds_run = 0;
};

// Iterates (1) local improvement, (2) geometric duplication, (3) greedy
// point removal back to target_n, re-optimizing the coloring after every
// stage; reports the best crossing constant among members admitting a
// halving matching. Budget 0 evaluates the seed only.
PipelineResult pipeline(const Drawing& seed, const Coloring* coloring,
                        const PipelineOptions& opts);

struct ScanOptions {
    uint64_t seed = 1;
    int jobs = 1;
    int restarts = 60;
    int max_cycle_len = 5;       // initial odd-cycle cap for the ILP
    int escalate_cycle_len = 9;  // raised stepwise while uncertified
    uint64_t ilp_budget = 500'000;
    long long limit = -1;        // max records, -1 = all
};

struct ScanRecord {
    int index = 0;
    long long cr = 0;
    long long cr2_upper = 0;
    long long cr2_lower = 0;
    bool certified = false;  // upper == lower
    std::string error;       // skipped record (permissive mode)
};

// Upper bound per record from the coloring heuristics, lower bound from the
// odd-cycle covering ILP; records are emitted in index order.
void scan_db(const std::string& path, const DbOptions& db, const ScanOptions& opts,
             const std::function<void(const ScanRecord&)>& emit);
ScanRecord scan_drawing(const Drawing& d, int index, const ScanOptions& opts);

}  // namespace monocross
