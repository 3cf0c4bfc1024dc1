#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monocross/coloring.hpp"
#include "monocross/geometry.hpp"
#include "monocross/halving.hpp"
#include "monocross/rational.hpp"

namespace monocross {

class InvalidMatchingError : public std::runtime_error {
public:
    explicit InvalidMatchingError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationFailedError : public std::runtime_error {
public:
    explicit ValidationFailedError(const std::string& what) : std::runtime_error(what) {}
};

// Combinatorial state of one point under the duplication process: side
// counts of its color classes against the directed line of its matched edge,
// plus which class the matched edge belongs to. Cases follow the standard
// numbering: 1..3 matched in the smaller class, 4..6 in the larger; within
// each triple the larger class leans left / is balanced / leans right.
struct PointProfile {
    int case_id = 0;
    int64_t large_left = 0;
    int64_t large_right = 0;
    int64_t small_left = 0;
    int64_t small_right = 0;
    bool match_in_larger = false;

    int64_t halving_left() const { return match_in_larger ? large_left : small_left; }
    int64_t halving_right() const { return match_in_larger ? large_right : small_right; }
    int64_t total() const { return large_left + large_right + small_left + small_right; }

    auto key() const {
        return std::tuple(case_id, large_left, large_right, small_left, small_right,
                          match_in_larger);
    }
    bool operator==(const PointProfile& o) const { return key() == o.key(); }
    bool operator<(const PointProfile& o) const { return key() < o.key(); }
};

// Profile population after k duplication rounds, stored with
// multiplicities; total cardinality is m0 * 2^k.
struct DupState {
    int k = 0;
    int64_t m0 = 0;
    std::vector<std::pair<PointProfile, BigInt>> profiles;
    BigInt cr2 = 0;

    BigInt point_count() const;
    bool has_case(int case_id) const;
};

// One profile per point, relative to its matched edge. Throws
// InvalidMatchingError when the matching fails re-validation.
std::vector<PointProfile> classify(const Drawing& d, const Coloring& chi,
                                   const HalvingMatching& m);

DupState initial_state(const Drawing& d, const Coloring& chi, const HalvingMatching& m);

// The two child profiles of one duplication round.
std::pair<PointProfile, PointProfile> transition(const PointProfile& p);

// One combinatorial duplication round: children profiles plus the exact
// monochromatic-crossing recurrence
//   cr2' = 16 cr2 + C(m,2) - m
//        + 4 sum_p [C(Ll,2)+C(Lr,2)+C(Sl,2)+C(Sr,2)] + 2 sum_p (Hl+Hr)
// evaluated on the pre-step profiles with m = m0 * 2^k.
DupState claim1_step(const DupState& state);

struct GeometricDup {
    Drawing drawing;    // 2m points; children of point p are 2p and 2p+1
    Coloring coloring;
    HalvingMatching matching;
};

// Coordinate realization of one duplication round: each point is replaced by
// two points along its matched edge's line (offsets eps and -eps/2, eps
// halved from 1 until every placement condition holds under exact tests),
// edges inherit parent colors, the in-pair edges and the new matching follow
// the per-case rules.
GeometricDup geometric_duplicate(const Drawing& d, const Coloring& chi,
                                 const HalvingMatching& m);

struct Coefficients {
    Rational a, b, c, d;

    // A*16^k + B*8^k + C*4^k + D*2^k
    Rational eval(int k) const;
};

struct CoefficientFit {
    Coefficients coefficients;
    int64_t effective_m0 = 0;  // 2*m0 when a pre-step removed case-5 points
    bool prestepped = false;
};

// Exact coefficients of cr2(Q_k) = A*16^k + B*8^k + C*4^k + D*2^k, solved
// from rounds start_k..start_k+3 and validated against the following two
// rounds. A seed containing case-5 points is advanced one round first.
CoefficientFit solve_coefficients(const Drawing& d, const Coloring& chi,
                                  const HalvingMatching& m, int start_k = 1);
CoefficientFit solve_coefficients_from_state(DupState seed, int start_k = 1);

// 24*A / m^4: the asymptotic monochromatic-crossing density of the iterated
// process, an upper bound on cr2(K_n)/C(n,4).
Rational crossing_constant(const Drawing& d, const Coloring& chi, const HalvingMatching& m);
Rational crossing_constant(const CoefficientFit& fit);

}  // namespace monocross
