#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocross/geometry.hpp"
#include "monocross/rational.hpp"

namespace monocross {

// Odd cycles in the intersection graph; every one forces at least one
// monochromatic crossing. Cycles are stored canonically: smallest vertex
// first, then the lexicographically smaller of the two directions.
struct OddCycleFamily {
    std::vector<std::vector<int>> cycles;
    bool empty() const { return cycles.empty(); }
    std::size_t size() const { return cycles.size(); }
};

// All chordless odd cycles of length 3..max_len (max_len odd), each once up
// to rotation and reflection.
OddCycleFamily enumerate_odd_cycles(const IntersectionGraph& g, int max_len);

enum class BoundKind { Packing, Ilp, LpRelaxation };

struct LowerBoundCertificate {
    long long value = 0;
    BoundKind kind = BoundKind::Packing;
    // Packing: the crossing-disjoint cycles, one forced crossing each.
    // Ilp / LpRelaxation: the covering family the program was built from.
    std::vector<std::vector<int>> witness;
    bool exhausted_budget = false;
};

// Greedy maximum-cardinality family of cycles that pairwise share no
// crossing; its size is a valid lower bound on cr2(D).
LowerBoundCertificate cycle_packing_bound(const IntersectionGraph& g,
                                          const OddCycleFamily& family);

// 0/1 covering program: one binary per crossing, one >=1 constraint per odd
// cycle, minimize the selected crossings. Solved by branch and bound with a
// greedy fractional cycle-packing dual as the relaxation. On budget
// exhaustion degrades to the best proven bound (kind LpRelaxation).
LowerBoundCertificate solve_covering_ilp(const IntersectionGraph& g,
                                         const OddCycleFamily& family,
                                         uint64_t node_budget = 2'000'000);

class EmptyFamilyError : public std::runtime_error {
public:
    EmptyFamilyError() : std::runtime_error("odd-cycle family is empty") {}
};

// Writes the covering program in LP text form (Minimize / Subject To /
// Binary / End); variable x<i> is crossing index i in the canonical order
// of crossing_pairs.
void export_covering_ilp(const IntersectionGraph& g, const OddCycleFamily& family,
                         const std::string& path);

struct LpProgram {
    int n_vars = 0;
    std::vector<std::vector<int>> constraints;  // variable indices per row
};
LpProgram parse_covering_lp(const std::string& path);

// Lower-bound constant 24*c_hat / (m(m-1)(m-2)(m-3)) from the fact that
// every m-point subset induces at least c_hat monochromatic crossings.
Rational lemma1_constant(int m, const BigInt& c_hat);
// The same constant times C(n, 4).
Rational lemma1_bound(int m, const BigInt& c_hat, const BigInt& n);

struct CrossingLemmaBound {
    Rational value;                   // 3/116
    std::vector<std::string> derivation;
};

// Asymptotic lower bound on cr2(K_n)/C(n,4) from the improved crossing
// lemma cr(G) >= e^3 / (29 n^2), applied to each color class.
CrossingLemmaBound crossing_lemma_constant();

}  // namespace monocross
