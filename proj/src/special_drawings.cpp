#include "monocross/special_drawings.hpp"

#include <algorithm>

#include "monocross/rng.hpp"

namespace monocross {

Drawing convex_drawing(int n) {
    if (n < 3) throw std::invalid_argument("convex drawing needs n >= 3");
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({Rational(i), Rational(BigInt(i) * i)});
    return Drawing::complete(std::move(pts));
}

BigInt two_page_optimum(int n) {
    if (n < 3) throw std::invalid_argument("two-page formula needs n >= 3");
    BigInt v = BigInt(n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2);
    return v / 4;
}

DoubleChain double_chain(int n) {
    if (n < 2) throw std::invalid_argument("double chain needs n >= 2");
    // shallow parabola arcs facing each other across a wide gap; the chain
    // curvature (1 per step) is tiny against the gap so each chain bulges
    // toward the other
    BigInt gap = BigInt(4) * n * n * n + 8;
    std::vector<Point> pts;
    pts.reserve(2 * n);
    for (int i = 0; i < n; ++i)
        pts.push_back({Rational(i), Rational(gap + BigInt(i) * i)});
    for (int j = 0; j < n; ++j)
        pts.push_back({Rational(j), Rational(-gap - BigInt(j) * j)});
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, n + j);
    DoubleChain dc{n, Drawing::with_edges(std::move(pts), std::move(edges))};

    const Drawing& d = dc.drawing;
    auto upper = [&](int i) { return d.point(i); };
    auto lower = [&](int j) { return d.point(n + j); };
    // (i) successive pair of one chain + successive pair of the other are in
    // convex position
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
            if (!in_convex_position(upper(i), upper(i + 1), lower(j), lower(j + 1)))
                throw std::runtime_error("double-chain condition (i) failed");
    // (ii) three successive of one chain + one of the other never are
    for (int i = 0; i + 2 < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (in_convex_position(upper(i), upper(i + 1), upper(i + 2), lower(j)))
                throw std::runtime_error("double-chain condition (ii) failed (upper)");
            if (in_convex_position(lower(i), lower(i + 1), lower(i + 2), upper(j)))
                throw std::runtime_error("double-chain condition (ii) failed (lower)");
        }
    return dc;
}

Coloring double_chain_coloring(const DoubleChain& dc) {
    const Drawing& d = dc.drawing;
    Coloring chi(d.edge_count(), Color::Red);
    for (int e = 0; e < d.edge_count(); ++e) {
        auto [u, v] = d.edges()[e];
        int i = u + 1;          // chain ranks are 1-based
        int j = v - dc.n + 1;
        if (i < j) chi[e] = Color::Blue;
    }
    return chi;
}

Drawing random_drawing(int n, uint64_t seed, int64_t coord_range) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    RandomSource rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    auto admissible = [&](const Point& c) {
        for (const auto& p : pts)
            if (p.x == c.x && p.y == c.y) return false;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], c) == 0) return false;
        return true;
    };
    while (static_cast<int>(pts.size()) < n) {
        Point c{Rational(rng.range(0, coord_range - 1)), Rational(rng.range(0, coord_range - 1))};
        if (admissible(c)) pts.push_back(c);
    }
    return Drawing::complete(std::move(pts));
}

RatioReport ratio_report(const Drawing& d, int effort) {
    if (effort < 1) effort = 1;
    RatioReport rep;
    rep.cr = crossing_count(d);
    if (rep.cr == 0) {
        rep.crossing_free = true;
        rep.cr2_exact = true;
        rep.ratio = 0;
        return rep;
    }
    IntersectionGraph g = intersection_graph(d);
    if (d.edge_count() <= 30 + 8 * effort) {
        auto exact = exact_cr2(g, static_cast<uint64_t>(effort) * 500'000);
        if (exact.optimal) {
            rep.cr2_best = exact.value;
            rep.cr2_exact = true;
            rep.ratio = Rational(rep.cr2_best, rep.cr);
            return rep;
        }
    }
    auto heur = anneal(g, 7, AnnealSchedule{.restarts = effort});
    auto ls = local_search(g, 11, 40 * effort);
    rep.cr2_best = std::min(heur.mono_count, ls.mono_count);
    rep.cr2_exact = false;
    rep.ratio = Rational(rep.cr2_best, rep.cr);
    return rep;
}

}  // namespace monocross
