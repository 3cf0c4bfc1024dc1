#include <filesystem>

#include "doctest.h"
#include "monocross/pipeline.hpp"
#include "monocross/special_drawings.hpp"
#include "test_util.hpp"

using namespace monocross;
using namespace monocross::test;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("improve never worsens the incumbent") {
    Drawing d = random_drawing(8, 15);
    auto g = intersection_graph(d);
    auto base = local_search(g, 1, 16);
    ImproveOptions opts;
    opts.iterations = 120;
    opts.seed = 2;
    auto res = improve_drawing(d, &base.coloring, opts);
    CHECK(res.cr2 <= base.mono_count);
    CHECK(res.cr2 == mono_crossings(res.drawing, res.coloring));
}

TEST_CASE("budget 0 evaluates the seed only") {
    Drawing d = convex_drawing(8);
    PipelineOptions opts;
    opts.budget = 0;
    opts.seed = 5;
    auto res = pipeline(d, nullptr, opts);
    CHECK(res.rounds_run == 0);
    REQUIRE(res.constant.has_value());
    CHECK(res.drawing.size() == 8);
    // seed member with its optimized coloring, constant computed once
    CHECK(res.constant_history.size() == 1);
}

TEST_CASE("reported best constant never increases") {
    Drawing d = convex_drawing(6);
    PipelineOptions opts;
    opts.budget = 2;
    opts.seed = 9;
    opts.improve_iterations = 60;
    auto res = pipeline(d, nullptr, opts);
    REQUIRE(!res.constant_history.empty());
    for (std::size_t i = 1; i < res.constant_history.size(); ++i)
        CHECK(res.constant_history[i] <= res.constant_history[i - 1]);
    REQUIRE(res.constant.has_value());
    CHECK(*res.constant == res.constant_history.back());
}

TEST_CASE("members without a halving matching are skipped with a warning") {
    // all-red square: the only halving edges collide, so no matching exists
    Drawing d = unit_square();
    Coloring all_red(d.edge_count(), Color::Red);
    PipelineOptions opts;
    opts.budget = 0;
    auto res = pipeline(d, &all_red, opts);
    (void)res;  // must not throw; warnings may or may not fire after re-coloring
}

TEST_CASE("scan_drawing certifies small drawings") {
    ScanOptions opts;
    opts.restarts = 40;
    auto rec = scan_drawing(convex_drawing(6), 0, opts);
    CHECK(rec.cr == 15);
    CHECK(rec.cr2_upper == 3);
    CHECK(rec.cr2_lower <= rec.cr2_upper);
    auto rec5 = scan_drawing(convex_drawing(5), 1, opts);
    CHECK(rec5.cr2_upper == 1);
    CHECK(rec5.cr2_lower == 1);
    CHECK(rec5.certified);
}

TEST_CASE("scan_db streams records in index order") {
    std::vector<Drawing> fixtures;
    for (uint64_t s = 0; s < 6; ++s) fixtures.push_back(random_drawing(6, 100 + s, 1 << 14));
    DbOptions db{.n = 6, .width = 2};
    std::string path = temp_path("monocross_scan.bin");
    write_order_type_db(path, fixtures, db);

    ScanOptions opts;
    opts.restarts = 30;
    std::vector<ScanRecord> seq;
    scan_db(path, db, opts, [&](const ScanRecord& r) { seq.push_back(r); });
    REQUIRE(seq.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(seq[i].index == i);
        CHECK(seq[i].cr2_lower <= seq[i].cr2_upper);
    }

    // parallel execution returns the identical stream
    ScanOptions par = opts;
    par.jobs = 3;
    std::vector<ScanRecord> seq2;
    scan_db(path, db, par, [&](const ScanRecord& r) { seq2.push_back(r); });
    REQUIRE(seq2.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq2[i].index == seq[i].index);
        CHECK(seq2[i].cr2_upper == seq[i].cr2_upper);
        CHECK(seq2[i].cr2_lower == seq[i].cr2_lower);
    }

    ScanOptions limited = opts;
    limited.limit = 2;
    std::vector<ScanRecord> seq3;
    scan_db(path, db, limited, [&](const ScanRecord& r) { seq3.push_back(r); });
    CHECK(seq3.size() == 2);
    std::filesystem::remove(path);
}

TEST_SUITE_END();
