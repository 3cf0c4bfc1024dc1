#include "monocross/duplication.hpp"

#include <algorithm>
#include <map>

namespace monocross {

namespace {

BigInt choose2(const BigInt& x) { return x * (x - 1) / 2; }
BigInt choose2(int64_t x) { return choose2(BigInt(x)); }

int case_of(bool match_in_larger, int64_t ll, int64_t lr) {
    int base = match_in_larger ? 4 : 1;
    if (ll > lr) return base;      // 1 or 4
    if (ll == lr) return base + 1; // 2 or 5
    return base + 2;               // 3 or 6
}

void require_complete_even(const Drawing& d) {
    if (!d.complete_flag())
        throw std::invalid_argument("duplication requires a complete drawing");
    if (d.size() % 2 != 0) throw OddCardinalityError();
}

}  // namespace

BigInt DupState::point_count() const {
    BigInt total = 0;
    for (const auto& [profile, mult] : profiles) total += mult;
    return total;
}

bool DupState::has_case(int case_id) const {
    for (const auto& [profile, mult] : profiles)
        if (profile.case_id == case_id) return true;
    return false;
}

std::vector<PointProfile> classify(const Drawing& d, const Coloring& chi,
                                   const HalvingMatching& m) {
    require_complete_even(d);
    if (!verify_halving_matching(d, chi, m))
        throw InvalidMatchingError("matching fails halving re-validation");
    std::vector<PointProfile> profiles;
    profiles.reserve(d.size());
    for (int p = 0; p < d.size(); ++p) {
        int e = m.match[p];
        auto check = halving_side_counts(d, chi, p, e);
        LargerClass lc = larger_class_at(d, chi, p);
        PointProfile prof;
        prof.large_left = check.counts.large_left;
        prof.large_right = check.counts.large_right;
        prof.small_left = check.counts.small_left;
        prof.small_right = check.counts.small_right;
        prof.match_in_larger = chi[e] == lc.cls;
        prof.case_id = case_of(prof.match_in_larger, prof.large_left, prof.large_right);
        profiles.push_back(prof);
    }
    return profiles;
}

DupState initial_state(const Drawing& d, const Coloring& chi, const HalvingMatching& m) {
    DupState state;
    state.k = 0;
    state.m0 = d.size();
    state.cr2 = mono_crossings(d, chi);
    std::map<PointProfile, BigInt> agg;
    for (const auto& prof : classify(d, chi, m)) agg[prof] += 1;
    state.profiles.assign(agg.begin(), agg.end());
    return state;
}

std::pair<PointProfile, PointProfile> transition(const PointProfile& p) {
    const int64_t ll = p.large_left, lr = p.large_right;
    const int64_t sl = p.small_left, sr = p.small_right;
    auto make = [](bool in_larger, int64_t a, int64_t b, int64_t c, int64_t d) {
        PointProfile prof;
        prof.match_in_larger = in_larger;
        prof.large_left = a;
        prof.large_right = b;
        prof.small_left = c;
        prof.small_right = d;
        prof.case_id = case_of(in_larger, a, b);
        return prof;
    };
    switch (p.case_id) {
        case 1:
            return {make(false, 2 * ll, 2 * lr + 1, 2 * sl, 2 * sr + 1),
                    make(false, 2 * ll, 2 * lr + 1, 2 * sl + 1, 2 * sr)};
        case 2:
            return {make(false, 2 * ll, 2 * lr, 2 * sl + 1, 2 * sr + 1),
                    make(false, 2 * ll, 2 * lr, 2 * sl + 1, 2 * sr + 1)};
        case 3:
            return {make(false, 2 * ll + 1, 2 * lr, 2 * sl + 1, 2 * sr),
                    make(false, 2 * ll + 1, 2 * lr, 2 * sl, 2 * sr + 1)};
        case 4:
            return {make(true, 2 * ll, 2 * lr + 1, 2 * sl, 2 * sr + 1),
                    make(true, 2 * ll, 2 * lr + 1, 2 * sl + 1, 2 * sr)};
        case 5:
            // the first child lands in case 2, the second in the mirrored
            // half of the case-4/6 family
            return {make(false, 2 * ll + 1, 2 * lr + 1, 2 * sl, 2 * sr),
                    make(true, 2 * ll, 2 * lr + 1, 2 * sl + 1, 2 * sr)};
        case 6:
            return {make(true, 2 * ll + 1, 2 * lr, 2 * sl + 1, 2 * sr),
                    make(true, 2 * ll + 1, 2 * lr, 2 * sl, 2 * sr + 1)};
        default:
            throw std::logic_error("bad case id");
    }
}

DupState claim1_step(const DupState& state) {
    BigInt m = BigInt(state.m0) << state.k;
    BigInt delta = choose2(m) - m;
    for (const auto& [prof, mult] : state.profiles) {
        if (BigInt(prof.total()) != m - 2)
            throw std::logic_error("profile side counts do not sum to m-2");
        BigInt type2a = choose2(prof.large_left) + choose2(prof.large_right) +
                        choose2(prof.small_left) + choose2(prof.small_right);
        BigInt type2b = BigInt(prof.halving_left()) + prof.halving_right();
        delta += mult * (4 * type2a + 2 * type2b);
    }
    DupState next;
    next.k = state.k + 1;
    next.m0 = state.m0;
    next.cr2 = 16 * state.cr2 + delta;
    std::map<PointProfile, BigInt> agg;
    for (const auto& [prof, mult] : state.profiles) {
        auto [c1, c2] = transition(prof);
        agg[c1] += mult;
        agg[c2] += mult;
    }
    next.profiles.assign(agg.begin(), agg.end());
    return next;
}

GeometricDup geometric_duplicate(const Drawing& d, const Coloring& chi,
                                 const HalvingMatching& m) {
    require_complete_even(d);
    if (!verify_halving_matching(d, chi, m))
        throw InvalidMatchingError("matching fails halving re-validation");
    const int n = d.size();

    std::vector<int> partner(n);  // q of the matched edge (p, q)
    for (int p = 0; p < n; ++p) {
        const auto& [a, b] = d.edges()[m.match[p]];
        partner[p] = a == p ? b : a;
    }

    // p_far = p + eps*(p-q), p_near = p - (eps/2)*(p-q); halve eps until all
    // orientations of distinct parent triples survive duplication and every
    // foreign child keeps the parent's side of each in-pair line.
    std::vector<Point> far(n), near(n);
    Rational eps = 1;
    const int max_halvings = 512;
    bool placed = false;
    for (int attempt = 0; attempt < max_halvings; ++attempt, eps /= 2) {
        for (int p = 0; p < n; ++p) {
            const Point& pp = d.point(p);
            const Point& qq = d.point(partner[p]);
            Point u{pp.x - qq.x, pp.y - qq.y};
            far[p] = Point{pp.x + eps * u.x, pp.y + eps * u.y};
            near[p] = Point{pp.x - eps / 2 * u.x, pp.y - eps / 2 * u.y};
        }
        auto child = [&](int p, int which) -> const Point& {
            return which == 0 ? far[p] : near[p];
        };
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                for (int c = b + 1; c < n && ok; ++c) {
                    int base = d.orientation3(a, b, c);
                    for (int i = 0; i < 2 && ok; ++i)
                        for (int j = 0; j < 2 && ok; ++j)
                            for (int k = 0; k < 2 && ok; ++k)
                                if (orientation(child(a, i), child(b, j), child(c, k)) != base)
                                    ok = false;
                }
        for (int p = 0; p < n && ok; ++p)
            for (int r = 0; r < n && ok; ++r) {
                // the partner's children straddle the matched line by design
                if (r == p || r == partner[p]) continue;
                int base = d.orientation3(partner[p], p, r);
                for (int j = 0; j < 2 && ok; ++j)
                    if (orientation(near[p], far[p], child(r, j)) != base) ok = false;
            }
        for (int e = 0; e < d.edge_count() && ok; ++e) {
            auto [r, s] = d.edges()[e];
            for (int p = 0; p < n && ok; ++p) {
                if (p == r || p == s) continue;
                int base = d.orientation3(r, s, p);
                for (int i = 0; i < 2 && ok; ++i)
                    if (orientation(d.point(r), d.point(s), child(p, i)) != base) ok = false;
            }
        }
        if (ok) {
            placed = true;
            break;
        }
    }
    if (!placed) throw std::runtime_error("placement search failed to converge");

    // children of parent p sit at indices 2p (far) and 2p+1 (near)
    std::vector<Point> points(2 * n);
    for (int p = 0; p < n; ++p) {
        points[2 * p] = far[p];
        points[2 * p + 1] = near[p];
    }
    GeometricDup out{Drawing::complete(std::move(points)), {}, {}};
    const Drawing& q = out.drawing;

    out.coloring.assign(q.edge_count(), Color::Red);
    auto profiles = classify(d, chi, m);
    for (int e = 0; e < q.edge_count(); ++e) {
        auto [x, y] = q.edges()[e];
        int px = x / 2, py = y / 2;
        if (px != py) {
            out.coloring[e] = chi[d.edge_index(px, py)];
        } else {
            Color large = larger_class_at(d, chi, px).cls;
            int c = profiles[px].case_id;
            out.coloring[e] = (c == 1 || c == 3) ? large : other(large);
        }
    }

    out.matching.match.assign(2 * n, -1);
    for (int p = 0; p < n; ++p) {
        int qv = partner[p];
        // child of q left of the line through the matched edge, directed q -> p
        int q_left = orientation(d.point(qv), d.point(p), far[qv]) > 0 ? 2 * qv : 2 * qv + 1;
        int q_right = q_left == 2 * qv ? 2 * qv + 1 : 2 * qv;
        int p1 = 2 * p, p2 = 2 * p + 1;
        switch (profiles[p].case_id) {
            case 1:
                out.matching.match[p1] = q.edge_index(p1, q_left);
                out.matching.match[p2] = q.edge_index(p2, q_right);
                break;
            case 2:
                out.matching.match[p1] = q.edge_index(p1, p2);
                out.matching.match[p2] = q.edge_index(p2, q_right);
                break;
            case 3:
                out.matching.match[p1] = q.edge_index(p1, q_right);
                out.matching.match[p2] = q.edge_index(p2, q_left);
                break;
            case 4:
                out.matching.match[p1] = q.edge_index(p1, q_left);
                out.matching.match[p2] = q.edge_index(p2, q_left);
                break;
            case 5:
                out.matching.match[p1] = q.edge_index(p1, p2);
                out.matching.match[p2] = q.edge_index(p2, q_left);
                break;
            case 6:
                out.matching.match[p1] = q.edge_index(p1, q_right);
                out.matching.match[p2] = q.edge_index(p2, q_right);
                break;
            default:
                throw std::logic_error("bad case id");
        }
    }
    return out;
}

Rational Coefficients::eval(int k) const {
    auto pw = [&](int base) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    };
    return a * pw(16) + b * pw(8) + c * pw(4) + d * pw(2);
}

namespace {

// Solve the 4x4 system sum_j coeff_j * base_j^k = value_k exactly.
Coefficients solve_power_system(const std::array<int, 4>& ks,
                                const std::array<BigInt, 4>& values) {
    const int bases[4] = {16, 8, 4, 2};
    Rational mat[4][5];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Rational pw = 1;
            for (int i = 0; i < ks[r]; ++i) pw *= bases[c];
            mat[r][c] = pw;
        }
        mat[r][4] = Rational(values[r]);
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && mat[pivot][col] == 0) ++pivot;
        if (pivot == 4) throw std::logic_error("singular power system");
        if (pivot != col)
            for (int c = 0; c < 5; ++c) std::swap(mat[pivot][c], mat[col][c]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            Rational f = mat[r][col] / mat[col][col];
            for (int c = col; c < 5; ++c) mat[r][c] -= f * mat[col][c];
        }
    }
    return Coefficients{mat[0][4] / mat[0][0], mat[1][4] / mat[1][1],
                        mat[2][4] / mat[2][2], mat[3][4] / mat[3][3]};
}

}  // namespace

CoefficientFit solve_coefficients_from_state(DupState seed, int start_k) {
    if (start_k < 1) throw std::invalid_argument("start_k must be >= 1");
    CoefficientFit fit;
    fit.effective_m0 = seed.m0;
    if (seed.has_case(5)) {
        seed = claim1_step(seed);
        seed.k = 0;
        seed.m0 *= 2;
        fit.effective_m0 = seed.m0;
        fit.prestepped = true;
    }
    std::vector<BigInt> values(start_k + 6);  // values[j] = cr2 after j rounds
    DupState state = seed;
    for (int j = 1; j <= start_k + 5; ++j) {
        state = claim1_step(state);
        values[j] = state.cr2;
    }
    std::array<int, 4> ks{start_k, start_k + 1, start_k + 2, start_k + 3};
    std::array<BigInt, 4> vals{values[ks[0]], values[ks[1]], values[ks[2]], values[ks[3]]};
    fit.coefficients = solve_power_system(ks, vals);
    for (int j = start_k + 4; j <= start_k + 5; ++j)
        if (fit.coefficients.eval(j) != Rational(values[j]))
            throw ValidationFailedError("closed form mismatch at k=" + std::to_string(j));
    return fit;
}

CoefficientFit solve_coefficients(const Drawing& d, const Coloring& chi,
                                  const HalvingMatching& m, int start_k) {
    return solve_coefficients_from_state(initial_state(d, chi, m), start_k);
}

Rational crossing_constant(const CoefficientFit& fit) {
    BigInt m4 = BigInt(fit.effective_m0);
    m4 = m4 * m4 * m4 * m4;
    return 24 * fit.coefficients.a / Rational(m4);
}

Rational crossing_constant(const Drawing& d, const Coloring& chi,
                           const HalvingMatching& m) {
    return crossing_constant(solve_coefficients(d, chi, m));
}

}  // namespace monocross
