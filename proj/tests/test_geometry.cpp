#include <algorithm>

#include "doctest.h"
#include "monocross/geometry.hpp"
#include "monocross/rng.hpp"
#include "monocross/special_drawings.hpp"
#include "test_util.hpp"

using namespace monocross;
using namespace monocross::test;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("orientation signs") {
    Point o{Rational(0), Rational(0)};
    Point ex{Rational(1), Rational(0)};
    Point ey{Rational(0), Rational(1)};
    CHECK(orientation(o, ex, ey) == 1);
    CHECK(orientation(o, ex, Point{Rational(2), Rational(0)}) == 0);
    CHECK(orientation(o, ey, ex) == -1);
    // exactness: a slope mismatch of 1e-30 must still be detected
    Point tiny{Rational(BigInt(10) ,  BigInt("1000000000000000000000000000000")), Rational(1)};
    CHECK(orientation(o, Point{Rational(0), Rational(2)}, tiny) == -1);
}

TEST_CASE("segments_cross on the unit square") {
    Drawing d = unit_square();
    int diag1 = d.edge_index(0, 2), diag2 = d.edge_index(1, 3);
    int side1 = d.edge_index(0, 1), side2 = d.edge_index(2, 3);
    CHECK(segments_cross(d, diag1, diag2));
    CHECK_FALSE(segments_cross(d, side1, side2));
    CHECK_FALSE(segments_cross(d, side1, diag1));  // shared vertex 0
}

TEST_CASE("crossing_pairs counts") {
    CHECK(crossing_pairs(unit_square()).size() == 1);
    CHECK(crossing_pairs(convex_drawing(6)).size() == 15);
    // one interior point: 3 of the C(5,4) quadruples stay convex
    Drawing five = drawing_of({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}});
    CHECK(convex_quadruple_count(five) == 3);
    CHECK(crossing_pairs(five).size() == 3);
}

TEST_CASE("crossing_pairs matches the naive definition and the quadruple oracle") {
    for (uint64_t seed : {11u, 22u, 33u}) {
        Drawing d = random_drawing(9, seed);
        auto pairs = crossing_pairs(d);
        long long naive = 0;
        for (int e = 0; e < d.edge_count(); ++e)
            for (int f = e + 1; f < d.edge_count(); ++f)
                if (naive_cross(d, e, f)) ++naive;
        CHECK(static_cast<long long>(pairs.size()) == naive);
        CHECK(static_cast<long long>(pairs.size()) == convex_quadruple_count(d));
        CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    }
}

TEST_CASE("convex drawings have C(n,4) crossings") {
    for (int n = 4; n <= 12; ++n)
        CHECK(BigInt(crossing_count(convex_drawing(n))) == binomial(n, 4));
}

TEST_CASE("intersection graph basics") {
    Drawing d = unit_square();
    IntersectionGraph g = intersection_graph(d);
    CHECK(g.n_edges == 6);
    CHECK(g.crossing_count() == 1);
    CHECK(g.adjacent(d.edge_index(0, 2), d.edge_index(1, 3)));

    IntersectionGraph none = intersection_graph(drawing_of({{0, 0}, {4, 1}, {2, 5}}));
    CHECK(none.crossing_count() == 0);
}

TEST_CASE("convex K5 intersection graph is a 5-cycle") {
    Drawing d = convex_drawing(5);
    IntersectionGraph g = intersection_graph(d);
    CHECK(g.n_edges == 10);
    CHECK(g.crossing_count() == 5);
    int on_cycle = 0;
    for (int e = 0; e < g.n_edges; ++e) {
        CHECK(g.degree(e) <= 2);
        if (g.degree(e) == 2) ++on_cycle;
    }
    CHECK(on_cycle == 5);
    // connected 2-regular subgraph on 5 vertices: walk it
    int start = -1;
    for (int e = 0; e < g.n_edges; ++e)
        if (g.degree(e) == 2) start = e;
    int prev = -1, cur = start, steps = 0;
    do {
        int next = g.adjacency[cur][0] == prev ? g.adjacency[cur][1] : g.adjacency[cur][0];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != start && steps <= 5);
    CHECK(steps == 5);
}

TEST_CASE("adjacency count equals crossing pair count") {
    for (uint64_t seed : {5u, 6u}) {
        Drawing d = random_drawing(8, seed);
        CHECK(intersection_graph(d).crossing_count() ==
              static_cast<long long>(crossing_pairs(d).size()));
    }
}

TEST_CASE("general position is enforced") {
    CHECK_THROWS_AS(drawing_of({{0, 0}, {1, 0}, {2, 0}}), GeneralPositionError);
    CHECK_THROWS_AS(drawing_of({{0, 0}, {3, 1}, {0, 0}}), GeneralPositionError);
    try {
        drawing_of({{0, 7}, {5, 3}, {1, 0}, {2, 0}, {3, 0}});
    } catch (const GeneralPositionError& e) {
        CHECK(e.indices == std::array<int, 3>{2, 3, 4});
    }
}

TEST_CASE("random triples of a valid drawing never report collinear") {
    Drawing d = random_drawing(12, 77);
    for (int a = 0; a < d.size(); ++a)
        for (int b = a + 1; b < d.size(); ++b)
            for (int c = b + 1; c < d.size(); ++c)
                CHECK(d.orientation3(a, b, c) != 0);
}

TEST_CASE("crossing pairs are invariant under positive affine maps") {
    RandomSource rng(404);
    Drawing d = random_drawing(8, 40);
    auto base = crossing_pairs(d);
    for (int trial = 0; trial < 4; ++trial) {
        // random unimodular matrix from shears, plus a translation
        int64_t s1 = rng.range(-3, 3), s2 = rng.range(-3, 3);
        int64_t tx = rng.range(-50, 50), ty = rng.range(-50, 50);
        std::vector<Point> pts;
        for (const auto& p : d.points()) {
            Rational x = p.x + s1 * p.y;
            Rational y = p.y;
            y = y + s2 * x;
            pts.push_back({x + tx, y + ty});
        }
        CHECK(crossing_pairs(Drawing::complete(pts)) == base);
    }
}

TEST_CASE("edge list is canonical") {
    Drawing d = convex_drawing(5);
    CHECK(std::is_sorted(d.edges().begin(), d.edges().end()));
    int idx = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(d.edge_index(i, j) == idx++);
    CHECK_THROWS_AS(d.edge_index(0, 7), std::out_of_range);
}

TEST_CASE("rational coordinates round exactly") {
    std::vector<Point> pts = {{Rational(0), Rational(0)},
                              {Rational(1), Rational(BigInt(1), BigInt(3))},
                              {Rational(2), Rational(1)}};
    // slope from p0: 1/3 vs 1/2 — collinear only if arithmetic rounds
    CHECK(orientation(pts[0], pts[1], pts[2]) != 0);
    Drawing d = Drawing::complete(pts);
    CHECK(crossing_count(d) == 0);
}

TEST_SUITE_END();
