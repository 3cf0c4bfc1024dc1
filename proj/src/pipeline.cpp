#include "monocross/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "monocross/lower_bounds.hpp"
#include "monocross/rng.hpp"

namespace monocross {

namespace {

Rational bbox_span(const Drawing& d) {
    Rational min_x = d.point(0).x, max_x = min_x, min_y = d.point(0).y, max_y = min_y;
    for (const auto& p : d.points()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    Rational span = std::max(max_x - min_x, max_y - min_y);
    return span == 0 ? Rational(1) : span;
}

}  // namespace

ImproveResult improve_drawing(const Drawing& d, const Coloring* warm,
                              const ImproveOptions& opts) {
    RandomSource rng(opts.seed);
    ImproveResult cur{d, {}, 0, 0, 0};
    {
        auto g = intersection_graph(d);
        auto res = local_search(g, rng.next(), std::max(2 * opts.restarts, 8), warm);
        cur.coloring = res.coloring;
        cur.cr2 = res.mono_count;
        cur.cr = g.crossing_count();
    }
    Rational span = bbox_span(d);
    for (int it = 0; it < opts.iterations; ++it) {
        int v = static_cast<int>(rng.below(cur.drawing.size()));
        // rational step on a dyadic grid, coarse to fine
        int shift = static_cast<int>(rng.range(2, 14));
        Rational step = span / (BigInt(1) << shift);
        Rational dx = step * rng.range(-3, 3);
        Rational dy = step * rng.range(-3, 3);
        if (dx == 0 && dy == 0) continue;
        const Point& p = cur.drawing.point(v);
        try {
            Drawing cand = cur.drawing.with_point_moved(v, Point{p.x + dx, p.y + dy});
            auto g = intersection_graph(cand);
            auto res = local_search(g, rng.next(), opts.restarts, &cur.coloring);
            long long cand_cr = g.crossing_count();
            bool better = res.mono_count < cur.cr2 ||
                          (res.mono_count == cur.cr2 && cand_cr < cur.cr) ||
                          (opts.accept_equal && res.mono_count == cur.cr2 &&
                           cand_cr == cur.cr);
            if (better) {
                cur.drawing = std::move(cand);
                cur.coloring = res.coloring;
                cur.cr2 = res.mono_count;
                cur.cr = cand_cr;
                ++cur.accepted_moves;
            }
        } catch (const GeneralPositionError&) {
            continue;  // degenerate move, try another
        }
    }
    return cur;
}

namespace {

struct Member {
    Drawing drawing;
    Coloring coloring;
    long long cr2 = 0;
};

struct BestTracker {
    std::optional<Rational> best_constant;
    std::optional<Member> best_member;
    std::optional<Member> min_cr2_member;  // at target size
    std::vector<Rational> history;
    std::vector<std::string> warnings;
    int target = 0;

    void note_cr2(const Member& m) {
        if (m.drawing.size() != target) return;
        if (!min_cr2_member || m.cr2 < min_cr2_member->cr2) min_cr2_member = m;
    }

    void evaluate(const Member& m, const std::string& stage) {
        note_cr2(m);
        if (m.drawing.size() % 2 != 0) {
            warnings.push_back(stage + ": odd member, constant skipped");
            return;
        }
        auto search = find_halving_matching(m.drawing, m.coloring);
        if (!search.found) {
            warnings.push_back(stage + ": no halving matching, constant skipped");
            return;
        }
        Rational c = crossing_constant(m.drawing, m.coloring, search.matching);
        if (!best_constant || c < *best_constant) {
            best_constant = c;
            best_member = m;
        }
        history.push_back(*best_constant);
    }
};

}  // namespace

PipelineResult pipeline(const Drawing& seed, const Coloring* coloring,
                        const PipelineOptions& opts) {
    RandomSource rng(opts.seed);
    int target = opts.target_n > 0 ? opts.target_n : seed.size();

    Member cur;
    cur.drawing = seed;
    {
        auto g = intersection_graph(seed);
        auto res = local_search(g, rng.next(), std::max(2 * opts.restarts, 8), coloring);
        cur.coloring = res.coloring;
        cur.cr2 = res.mono_count;
    }
    BestTracker best;
    best.target = target;
    best.evaluate(cur, "seed");

    int rounds = 0;
    for (; rounds < opts.budget; ++rounds) {
        // (1) improve in place
        ImproveOptions imp;
        imp.iterations = opts.improve_iterations;
        imp.seed = rng.next();
        imp.restarts = opts.restarts;
        auto improved = improve_drawing(cur.drawing, &cur.coloring, imp);
        cur = Member{improved.drawing, improved.coloring, improved.cr2};
        best.evaluate(cur, "improve");

        // (2) enlarge by duplication
        if (cur.drawing.size() % 2 == 0) {
            auto search = find_halving_matching(cur.drawing, cur.coloring);
            if (search.found) {
                auto dup = geometric_duplicate(cur.drawing, cur.coloring, search.matching);
                auto g = intersection_graph(dup.drawing);
                auto res = local_search(g, rng.next(), opts.restarts, &dup.coloring);
                cur = Member{dup.drawing, res.coloring, res.mono_count};
                best.evaluate(cur, "enlarge");
            } else {
                best.warnings.push_back("enlarge: no halving matching, stage skipped");
            }
        } else {
            best.warnings.push_back("enlarge: odd member, stage skipped");
        }

        // (3) extract the best subset of the target size
        while (cur.drawing.size() > target) {
            long long best_cr2 = -1;
            int best_v = -1;
            Coloring best_chi;
            for (int v = 0; v < cur.drawing.size(); ++v) {
                Drawing cand = cur.drawing.without_point(v);
                auto g = intersection_graph(cand);
                auto res = local_search(g, opts.seed + v, opts.restarts);
                if (best_cr2 < 0 || res.mono_count < best_cr2) {
                    best_cr2 = res.mono_count;
                    best_v = v;
                    best_chi = res.coloring;
                }
            }
            cur = Member{cur.drawing.without_point(best_v), std::move(best_chi), best_cr2};
        }
        best.evaluate(cur, "extract");
    }

    PipelineResult out;
    out.rounds_run = rounds;
    if (best.min_cr2_member) {
        out.min_cr2_drawing = best.min_cr2_member->drawing;
        out.min_cr2_coloring = best.min_cr2_member->coloring;
        out.min_cr2 = best.min_cr2_member->cr2;
    }
    if (best.best_member) {
        out.drawing = best.best_member->drawing;
        out.coloring = best.best_member->coloring;
        out.cr2 = best.best_member->cr2;
        out.constant = best.best_constant;
    } else {
        out.drawing = cur.drawing;
        out.coloring = cur.coloring;
        out.cr2 = cur.cr2;
    }
    out.constant_history = std::move(best.history);
    out.warnings = std::move(best.warnings);
    return out;
}

ScanRecord scan_drawing(const Drawing& d, int index, const ScanOptions& opts) {
    ScanRecord rec;
    rec.index = index;
    auto g = intersection_graph(d);
    rec.cr = g.crossing_count();
    uint64_t seed = opts.seed + static_cast<uint64_t>(index) * 0x9e3779b97f4a7c15ULL;
    auto upper = local_search(g, seed, opts.restarts);
    rec.cr2_upper = upper.mono_count;

    int len = opts.max_cycle_len;
    while (true) {
        auto family = enumerate_odd_cycles(g, len);
        auto cert = solve_covering_ilp(g, family, opts.ilp_budget);
        rec.cr2_lower = std::max(rec.cr2_lower, cert.value);
        if (rec.cr2_lower >= rec.cr2_upper || len >= opts.escalate_cycle_len) break;
        len += 2;
    }
    if (rec.cr2_lower < rec.cr2_upper) {
        auto annealed = anneal(g, seed, AnnealSchedule{.restarts = 2});
        if (annealed.mono_count < rec.cr2_upper) rec.cr2_upper = annealed.mono_count;
    }
    rec.certified = rec.cr2_lower == rec.cr2_upper;
    return rec;
}

void scan_db(const std::string& path, const DbOptions& db, const ScanOptions& opts,
             const std::function<void(const ScanRecord&)>& emit) {
    struct Item {
        int index;
        std::optional<Drawing> drawing;
        std::string error;
    };
    std::vector<Item> items;
    read_order_type_db(path, db, [&](DbRecord&& rec) {
        if (opts.limit >= 0 && static_cast<long long>(items.size()) >= opts.limit) return;
        items.push_back({rec.index, std::move(rec.drawing), std::move(rec.error)});
    });

    std::vector<ScanRecord> results(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            if (!items[i].drawing) {
                results[i].index = items[i].index;
                results[i].error = items[i].error;
                continue;
            }
            results[i] = scan_drawing(*items[i].drawing, items[i].index, opts);
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& rec : results) emit(rec);
}

}  // namespace monocross
