#include <algorithm>

#include "doctest.h"
#include "monocross/coloring.hpp"
#include "monocross/special_drawings.hpp"
#include "test_util.hpp"

using namespace monocross;
using namespace monocross::test;

TEST_SUITE_BEGIN("coloring");

TEST_CASE("mono_crossings on K4") {
    Drawing d = unit_square();
    int diag1 = d.edge_index(0, 2), diag2 = d.edge_index(1, 3);
    Coloring chi(d.edge_count(), Color::Red);
    CHECK(mono_crossings(d, chi) == 1);
    chi[diag1] = Color::Blue;
    CHECK(mono_crossings(d, chi) == 0);
    chi[diag2] = Color::Blue;
    CHECK(mono_crossings(d, chi) == 1);
}

TEST_CASE("mono_crossings matches the naive recount") {
    Drawing d = convex_drawing(6);
    Coloring chi(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e)
        chi[e] = e % 2 == 0 ? Color::Red : Color::Blue;
    CHECK(mono_crossings(d, chi) == naive_mono(d, chi));
    CHECK(mono_crossings(d, chi) + 0 < 15);  // some crossing is bichromatic
}

TEST_CASE("size mismatch is rejected") {
    Drawing d = unit_square();
    Coloring chi(3, Color::Red);
    CHECK_THROWS_AS(mono_crossings(d, chi), std::invalid_argument);
}

TEST_CASE("mono plus bichromatic equals cr") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        Drawing d = random_drawing(8, seed);
        long long cr = crossing_count(d);
        Coloring chi = random_coloring(d, seed * 7 + 1).coloring;
        long long mono = mono_crossings(d, chi);
        long long bi = 0;
        for (auto [e, f] : crossing_pairs(d))
            if (chi[e] != chi[f]) ++bi;
        CHECK(mono + bi == cr);
        // global color swap leaves the count unchanged
        Coloring swapped(chi.size());
        std::transform(chi.begin(), chi.end(), swapped.begin(), other);
        CHECK(mono_crossings(d, swapped) == mono);
    }
}

TEST_CASE("random_coloring is seed-deterministic") {
    Drawing d = convex_drawing(7);
    auto a = random_coloring(d, 99);
    auto b = random_coloring(d, 99);
    CHECK(a.coloring == b.coloring);
    CHECK(a.mono_count == b.mono_count);
    CHECK(random_coloring(d, 100).coloring != a.coloring);
}

TEST_CASE("random_coloring averages half of the crossings") {
    Drawing d = convex_drawing(8);  // cr = 70
    long long total = 0;
    const int trials = 1000;
    for (int s = 0; s < trials; ++s) total += random_coloring(d, s).mono_count;
    double mean = static_cast<double>(total) / trials;
    CHECK(mean > 33.0);
    CHECK(mean < 37.0);
}

TEST_CASE("local_search finds the obvious optima") {
    Drawing k3 = drawing_of({{0, 0}, {4, 1}, {2, 5}});
    CHECK(local_search(k3, 5).mono_count == 0);
    CHECK(local_search(unit_square(), 1).mono_count == 0);
}

TEST_CASE("local_search output is a single-flip local optimum") {
    for (uint64_t seed : {3u, 14u}) {
        Drawing d = random_drawing(9, seed);
        IntersectionGraph g = intersection_graph(d);
        auto res = local_search(g, seed);
        long long base = res.mono_count;
        CHECK(base == mono_crossings(g, res.coloring));
        for (int e = 0; e < g.n_edges; ++e) {
            Coloring flipped = res.coloring;
            flipped[e] = other(flipped[e]);
            CHECK(mono_crossings(g, flipped) >= base);
        }
    }
}

TEST_CASE("flip local optima use at most half of the crossings") {
    RandomSource rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 5 + static_cast<int>(rng.below(8));  // 5..12
        Drawing d = random_drawing(n, rng.next());
        long long cr = crossing_count(d);
        CHECK(local_search(d, rng.next()).mono_count <= cr / 2);
    }
}

TEST_CASE("local_search hits the two-page optimum of K8 with restarts") {
    Drawing d = convex_drawing(8);
    auto res = local_search(d, 7, 100);
    CHECK(res.mono_count == 18);
}

TEST_CASE("anneal dominates plain local search") {
    for (uint64_t seed : {21u, 22u}) {
        Drawing d = random_drawing(10, seed);
        auto a = anneal(d, seed);
        CHECK(a.mono_count <= local_search(d, seed).mono_count);
        CHECK(a.mono_count == mono_crossings(d, a.coloring));
    }
    Drawing k3 = drawing_of({{0, 0}, {4, 1}, {2, 5}});
    CHECK(anneal(k3, 1).mono_count == 0);
}

TEST_CASE("exact_cr2 on convex K5 matches exhaustive enumeration") {
    Drawing d = convex_drawing(5);
    IntersectionGraph g = intersection_graph(d);
    // brute force with the first edge fixed red
    long long best = 1'000'000;
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
        Coloring chi(10, Color::Red);
        for (int e = 1; e < 10; ++e)
            if (mask & (1u << (e - 1))) chi[e] = Color::Blue;
        best = std::min(best, mono_crossings(g, chi));
    }
    CHECK(best == 1);
    auto res = exact_cr2(d);
    CHECK(res.optimal);
    CHECK(res.value == 1);
    CHECK(mono_crossings(d, res.coloring) == 1);
}

TEST_CASE("exact_cr2 on convex K6") {
    auto res = exact_cr2(convex_drawing(6));
    CHECK(res.optimal);
    CHECK(res.value == 3);
    CHECK(BigInt(res.value) == two_page_optimum(6));
}

TEST_CASE("exact_cr2 on convex K8") {
    auto res = exact_cr2(convex_drawing(8));
    CHECK(res.optimal);
    CHECK(res.value == 18);
}

TEST_CASE("exact_cr2 degrades to an interval under a tiny budget") {
    auto res = exact_cr2(convex_drawing(8), 10);
    CHECK_FALSE(res.optimal);
    CHECK(res.lower_bound <= 18);
    CHECK(res.value >= 18);
    CHECK(res.lower_bound <= res.value);
}

TEST_CASE("exact_cr2 lower-bounds every heuristic") {
    RandomSource rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        Drawing d = random_drawing(7, rng.next());
        auto exact = exact_cr2(d);
        REQUIRE(exact.optimal);
        CHECK(exact.value <= local_search(d, rng.next()).mono_count);
        CHECK(exact.value <= anneal(d, rng.next()).mono_count);
        CHECK(exact.value <= random_coloring(d, rng.next()).mono_count);
    }
}

TEST_CASE("crossing-free drawings short-circuit to all red") {
    Drawing k3 = drawing_of({{0, 0}, {4, 1}, {2, 5}});
    auto res = exact_cr2(k3);
    CHECK(res.optimal);
    CHECK(res.value == 0);
    CHECK(std::all_of(res.coloring.begin(), res.coloring.end(),
                      [](Color c) { return c == Color::Red; }));
    CHECK(local_search(k3, 9).mono_count == 0);
}

TEST_CASE("coloring string round trip") {
    Coloring chi = coloring_from_string("RBBR");
    CHECK(coloring_string(chi) == "RBBR");
    CHECK_THROWS_AS(coloring_from_string("RBX"), std::invalid_argument);
}

TEST_SUITE_END();
