// Acceptance suite: runs the project's headline checks end to end and
// prints one PASS/FAIL line per criterion. Exit status 0 iff nothing failed
// (explicitly skipped data-dependent checks do not fail the run).
//
// Usage: acceptance_tests [criterion-number]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monocross/coloring.hpp"
#include "monocross/duplication.hpp"
#include "monocross/io.hpp"
#include "monocross/lower_bounds.hpp"
#include "monocross/pipeline.hpp"
#include "monocross/rng.hpp"
#include "monocross/special_drawings.hpp"

using namespace monocross;

namespace {

struct Seed {
    Drawing drawing;
    Coloring coloring;
    HalvingMatching matching;
};

// 20 random even seeds (m in {4,6,8}) with random colorings admitting a
// halving matching; shared by criteria 1-3.
const std::vector<Seed>& shared_seeds() {
    static std::vector<Seed> seeds = [] {
        std::vector<Seed> out;
        RandomSource rng(2u);
        auto add = [&](int m, int count) {
            while (count > 0) {
                Drawing d = random_drawing(m, rng.next(), 1 << 10);
                for (int tries = 0; tries < 6; ++tries) {
                    Coloring chi = random_coloring(d, rng.next()).coloring;
                    auto search = find_halving_matching(d, chi);
                    if (search.found) {
                        out.push_back({d, chi, search.matching});
                        --count;
                        break;
                    }
                }
            }
        };
        add(4, 8);
        add(6, 8);
        add(8, 4);
        return out;
    }();
    return seeds;
}

bool criterion1(std::string& detail) {
    int checked = 0;
    for (const auto& seed : shared_seeds()) {
        DupState st = initial_state(seed.drawing, seed.coloring, seed.matching);
        Drawing cur = seed.drawing;
        Coloring chi = seed.coloring;
        HalvingMatching m = seed.matching;
        for (int k = 1; k <= 3; ++k) {
            auto dup = geometric_duplicate(cur, chi, m);
            st = claim1_step(st);
            if (BigInt(mono_crossings(dup.drawing, dup.coloring)) != st.cr2) {
                detail = "direct count != formula at m=" + std::to_string(seed.drawing.size()) +
                         " k=" + std::to_string(k);
                return false;
            }
            if (!verify_halving_matching(dup.drawing, dup.coloring, dup.matching)) {
                detail = "duplicated matching failed re-validation";
                return false;
            }
            cur = dup.drawing;
            chi = dup.coloring;
            m = dup.matching;
            ++checked;
        }
    }
    detail = std::to_string(shared_seeds().size()) + " seeds, " + std::to_string(checked) +
             " geometric rounds, all counts exact";
    return true;
}

bool criterion2(std::string& detail) {
    for (const auto& seed : shared_seeds()) {
        CoefficientFit fit;
        try {
            fit = solve_coefficients(seed.drawing, seed.coloring, seed.matching);
        } catch (const ValidationFailedError& e) {
            detail = e.what();
            return false;
        }
        // re-check the k=5,6 predictions explicitly
        DupState st = initial_state(seed.drawing, seed.coloring, seed.matching);
        if (fit.prestepped) {
            st = claim1_step(st);
            st.k = 0;
            st.m0 *= 2;
        }
        for (int k = 1; k <= 6; ++k) {
            st = claim1_step(st);
            if (k >= 5 && fit.coefficients.eval(k) != Rational(st.cr2)) {
                detail = "prediction mismatch at k=" + std::to_string(k);
                return false;
            }
        }
    }
    detail = "coefficients from k=1..4 reproduce k=5,6 exactly on all " +
             std::to_string(shared_seeds().size()) + " seeds";
    return true;
}

bool criterion3(std::string& detail) {
    for (const auto& seed : shared_seeds()) {
        auto fit = solve_coefficients(seed.drawing, seed.coloring, seed.matching);
        Rational constant = crossing_constant(fit);
        DupState st = initial_state(seed.drawing, seed.coloring, seed.matching);
        if (fit.prestepped) {
            st = claim1_step(st);
            st.k = 0;
            st.m0 *= 2;
        }
        while ((BigInt(st.m0) << st.k) < 2000) st = claim1_step(st);
        Rational ratio = Rational(st.cr2) / Rational(binomial(BigInt(st.m0) << st.k, 4));
        Rational err = ratio > constant ? ratio - constant : constant - ratio;
        if (err * 100 > constant) {
            std::ostringstream ss;
            ss << "ratio off by more than 1% at n=" << (BigInt(st.m0) << st.k);
            detail = ss.str();
            return false;
        }
    }
    detail = "cr2(Q_k)/C(n,4) within 1% of 24A/m^4 at n >= 2000 on all seeds";
    return true;
}

bool criterion4(std::string& detail) {
    const long long expected[] = {1, 3, 9, 18};
    for (int n = 5; n <= 8; ++n) {
        auto res = exact_cr2(convex_drawing(n));
        if (!res.optimal || res.value != expected[n - 5]) {
            detail = "exact_cr2(convex K" + std::to_string(n) + ") != " +
                     std::to_string(expected[n - 5]);
            return false;
        }
    }
    for (int n = 5; n <= 12; ++n) {
        auto res = local_search(convex_drawing(n), 7, 150);
        if (BigInt(res.mono_count) != two_page_optimum(n)) {
            detail = "heuristic missed the two-page optimum on convex K" + std::to_string(n);
            return false;
        }
    }
    detail = "exact = 1,3,9,18 on convex K5..K8; heuristic matches two-page up to K12";
    return true;
}

bool criterion5(std::string& detail) {
    for (uint64_t attempt = 1; attempt <= 10; ++attempt) {
        Drawing seed = random_drawing(8, attempt);
        PipelineOptions opts;
        opts.budget = 2;
        opts.seed = attempt * 101;
        opts.improve_iterations = 1500;
        opts.restarts = 10;
        auto res = pipeline(seed, nullptr, opts);
        if (res.min_cr2 == 0) {
            if (mono_crossings(res.min_cr2_drawing, res.min_cr2_coloring) != 0) {
                detail = "zero claim failed the recount";
                return false;
            }
            detail = "monochromatic-crossing-free K8 found from random seed " +
                     std::to_string(attempt);
            return true;
        }
    }
    detail = "no zero-mono K8 drawing found within 10 pipeline seeds";
    return false;
}

bool criterion6(std::string& detail) {
    // (a) find a 9-point drawing with a 2-mono coloring, certified by the ILP
    bool found = false;
    for (uint64_t attempt = 1; attempt <= 12 && !found; ++attempt) {
        Drawing seed = random_drawing(9, attempt);
        ImproveOptions opts;
        opts.iterations = 4000;
        opts.seed = attempt * 77;
        opts.restarts = 12;
        auto res = improve_drawing(seed, nullptr, opts);
        if (res.cr2 != 2) continue;
        auto g = intersection_graph(res.drawing);
        long long lower = 0;
        for (int len = 5; len <= 9 && lower < 2; len += 2)
            lower = std::max(lower,
                             solve_covering_ilp(g, enumerate_odd_cycles(g, len)).value);
        if (lower != 2) {
            detail = "found a 2-mono drawing but the ILP certified only " +
                     std::to_string(lower);
            return false;
        }
        found = true;
    }
    if (!found) {
        detail = "no 2-mono K9 drawing found";
        return false;
    }

    // (b) sampled certification over >= 100 synthetic database order types
    std::vector<Drawing> fixtures;
    for (uint64_t s = 0; s < 110; ++s) fixtures.push_back(random_drawing(9, 5000 + s, 1 << 15));
    DbOptions db{.n = 9, .width = 2};
    std::string path =
        (std::filesystem::temp_directory_path() / "monocross_accept_k9.bin").string();
    write_order_type_db(path, fixtures, db);
    ScanOptions scan;
    scan.restarts = 60;
    scan.jobs = 4;
    int certified = 0, total = 0;
    bool ordered = true;
    scan_db(path, db, scan, [&](const ScanRecord& r) {
        if (r.cr2_lower > r.cr2_upper) ordered = false;
        if (r.certified) ++certified;
        ++total;
    });
    std::filesystem::remove(path);
    if (!ordered) {
        detail = "a record reported lower > upper";
        return false;
    }
    if (total < 100 || certified * 5 < total * 4) {
        detail = "certified only " + std::to_string(certified) + "/" + std::to_string(total);
        return false;
    }
    detail = "cr2=2 witness certified; db sample certified " + std::to_string(certified) +
             "/" + std::to_string(total);
    return true;
}

bool criterion7(std::string& detail) {
    if (lemma1_constant(11, 10) != Rational(1, 33)) {
        detail = "lemma1(11,10) != 1/33";
        return false;
    }
    if (lemma1_constant(9, 2) != Rational(1, 63)) {
        detail = "lemma1(9,2) != 1/63";
        return false;
    }
    auto lemma = crossing_lemma_constant();
    if (lemma.value != Rational(3, 116) || !(lemma.value > Rational(1, 39))) {
        detail = "crossing lemma constant != 3/116 (or <= 1/39)";
        return false;
    }
    detail = "1/33, 1/63 and 3/116 reproduced exactly";
    return true;
}

bool criterion8(std::string& detail) {
    RandomSource rng(88);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + static_cast<int>(rng.below(8));  // 5..12
        Drawing d = random_drawing(n, rng.next());
        long long cr = crossing_count(d);
        if (local_search(d, rng.next()).mono_count > cr / 2) {
            detail = "local search exceeded floor(cr/2)";
            return false;
        }
    }
    auto convex10 = ratio_report(convex_drawing(10));
    if (convex10.ratio != Rational(2, 7)) {
        detail = "convex K10 ratio != 2/7";
        return false;
    }
    for (int n = 3; n <= 60; ++n) {
        DoubleChain dc = double_chain(n);
        Rational fraction(BigInt(mono_crossings(dc.drawing, double_chain_coloring(dc))),
                          BigInt(crossing_count(dc.drawing)));
        if (!(fraction <= Rational(1, 3) + Rational(2, n))) {
            detail = "double chain fraction above 1/3 + 2/n at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "100 local optima <= cr/2; convex K10 ratio 2/7; chain fraction <= 1/3+2/n";
    return true;
}

// published 135-point certificate, verified only when the file is supplied
bool criterion9(std::string& detail, bool& skipped) {
    auto env = [](const char* name, const char* fallback) {
        const char* v = std::getenv(name);
        return std::string(v ? v : fallback);
    };
    std::string pts = env("MONOCROSS_N135_POINTS", "data/n135.pts");
    std::string col = env("MONOCROSS_N135_COLORING", "data/n135.col");
    std::string match = env("MONOCROSS_N135_MATCHING", "data/n135.match");
    if (!std::filesystem::exists(pts)) {
        skipped = true;
        detail = "certificate file not supplied (out of desk scope; covered by criteria 1-3)";
        return true;
    }
    Drawing d = read_point_text(pts);
    Coloring chi = read_coloring(col, d);
    if (d.size() != 135) {
        detail = "expected 135 points";
        return false;
    }
    long long mono = mono_crossings(d, chi);
    if (mono != 1'470'756) {
        detail = "cr2(D,chi) = " + std::to_string(mono) + " != 1470756";
        return false;
    }
    HalvingMatching m;
    if (std::filesystem::exists(match)) {
        m = read_matching(match, d);
        if (!verify_halving_matching(d, chi, m)) {
            detail = "supplied matching failed validation";
            return false;
        }
    } else {
        auto search = find_halving_matching(d, chi);
        if (!search.found) {
            detail = "no halving matching found";
            return false;
        }
        m = search.matching;
    }
    Rational constant = crossing_constant(d, chi, m);
    if (!(constant < Rational(11'798'016, 100'000'000))) {
        detail = "constant " + decimal_string(constant, 9) + " not below 0.11798016";
        return false;
    }
    detail = "cr2 = 1470756 and constant " + decimal_string(constant, 9) + " < 0.11798016";
    return true;
}

bool criterion10(std::string& detail) {
    std::vector<Drawing> corpus;
    for (int n = 5; n <= 8; ++n) corpus.push_back(convex_drawing(n));
    RandomSource rng(1010);
    for (int trial = 0; trial < 10; ++trial)
        corpus.push_back(random_drawing(5 + static_cast<int>(rng.below(4)), rng.next()));
    for (int n = 2; n <= 4; ++n) corpus.push_back(double_chain(n).drawing);
    for (uint64_t s = 0; s < 5; ++s) corpus.push_back(random_drawing(9, 5000 + s, 1 << 15));

    int checked = 0;
    for (const auto& d : corpus) {
        auto exact = exact_cr2(d, 20'000'000);
        if (!exact.optimal) continue;  // sweep covers terminating solves only
        auto g = intersection_graph(d);
        for (int len = 3; len <= 7; len += 2) {
            auto family = enumerate_odd_cycles(g, len);
            if (cycle_packing_bound(g, family).value > exact.value ||
                solve_covering_ilp(g, family).value > exact.value) {
                detail = "a certificate exceeded the exact optimum";
                return false;
            }
        }
        uint64_t s = 7 * checked + 1;
        if (local_search(g, s).mono_count < exact.value ||
            anneal(g, s).mono_count < exact.value ||
            random_coloring(d, s).mono_count < exact.value) {
            detail = "a heuristic undercut the exact optimum";
            return false;
        }
        ++checked;
    }
    detail = "certificates <= exact <= heuristics on all " + std::to_string(checked) +
             " corpus drawings, zero violations";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Entry {
        int id;
        const char* title;
        std::function<bool(std::string&, bool&)> run;
    };
    auto plain = [](bool (*f)(std::string&)) {
        return [f](std::string& detail, bool&) { return f(detail); };
    };
    std::vector<Entry> entries = {
        {1, "Claim 1 exactness (geometric count == recurrence)", plain(criterion1)},
        {2, "Claim 2 exactness (coefficients predict k=5,6)", plain(criterion2)},
        {3, "Theorem 1 constant convergence within 1%", plain(criterion3)},
        {4, "small exact values and two-page heuristic matches", plain(criterion4)},
        {5, "cr2(K8) = 0 found by the pipeline", plain(criterion5)},
        {6, "cr2(K9) = 2 witness + sampled ILP certification", plain(criterion6)},
        {7, "closed-form constants 1/33, 1/63, 3/116", plain(criterion7)},
        {8, "ratio properties (1/2 bound, 2/7, double chain)", plain(criterion8)},
        {9, "135-point certificate verification", criterion9},
        {10, "soundness sweep (bounds vs exact vs heuristics)", plain(criterion10)},
    };
    int failures = 0;
    for (auto& entry : entries) {
        if (only != 0 && entry.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool skipped = false;
        bool ok;
        try {
            ok = entry.run(detail, skipped);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* tag = skipped ? "SKIP" : ok ? "PASS" : "FAIL";
        std::printf("[%s] criterion %2d (%5.1fs): %s — %s\n", tag, entry.id, secs,
                    entry.title, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
