// monocross: counting, bounding and extrapolating 2-colored crossing
// numbers of straight-line drawings.
//
// Output is machine readable: one JSON record per line, exact integers and
// rationals rendered as strings. Exit codes: 0 success, 2 parse/validation
// error, 3 budget exceeded (partial certificate emitted).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "monocross/coloring.hpp"
#include "monocross/duplication.hpp"
#include "monocross/io.hpp"
#include "monocross/lower_bounds.hpp"
#include "monocross/pipeline.hpp"
#include "monocross/special_drawings.hpp"

using json = nlohmann::ordered_json;
using namespace monocross;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::string str(const BigInt& v) { return v.str(); }
std::string str(long long v) { return std::to_string(v); }
std::string str(const Rational& v) { return format_rational(v); }

void emit(const json& record) { std::cout << record.dump() << "\n"; }

const char* method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::LocalSearch: return "local-search";
        case SearchMethod::Annealing: return "annealing";
        case SearchMethod::Exact: return "exact";
        case SearchMethod::Random: return "random";
    }
    return "?";
}

int cmd_crossings(const std::string& file) {
    Drawing d = read_point_text(file);
    emit({{"op", "crossings"},
          {"file", file},
          {"n", str(BigInt(d.size()))},
          {"edges", str(BigInt(d.edge_count()))},
          {"cr", str(BigInt(crossing_count(d)))}});
    return kExitOk;
}

int cmd_color_opt(const std::string& file, uint64_t seed, int restarts, bool exact,
                  bool annealing, uint64_t budget, const std::string& out) {
    Drawing d = read_point_text(file);
    json rec{{"op", "color-opt"}, {"file", file}, {"seed", seed}};
    int code = kExitOk;
    Coloring chi;
    if (exact) {
        auto res = exact_cr2(d, budget);
        chi = res.coloring;
        rec["method"] = "exact";
        rec["optimal"] = res.optimal;
        rec["mono"] = str(res.value);
        rec["lower_bound"] = str(res.lower_bound);
        rec["nodes"] = res.nodes_used;
        if (!res.optimal) code = kExitBudget;
    } else {
        ColoringResult res = annealing ? anneal(d, seed, AnnealSchedule{.restarts = restarts})
                                       : local_search(d, seed, restarts);
        chi = res.coloring;
        rec["method"] = method_name(res.method);
        rec["mono"] = str(res.mono_count);
        rec["restarts"] = res.restarts_used;
    }
    rec["cr"] = str(BigInt(crossing_count(d)));
    rec["coloring"] = coloring_string(chi);
    if (!out.empty()) {
        write_coloring(chi, out);
        rec["coloring_file"] = out;
    }
    emit(rec);
    return code;
}

int cmd_lower_bound(const std::string& file, int max_len, uint64_t budget,
                    const std::string& lp_path) {
    Drawing d = read_point_text(file);
    IntersectionGraph g = intersection_graph(d);
    auto family = enumerate_odd_cycles(g, max_len);
    auto packing = cycle_packing_bound(g, family);
    auto ilp = solve_covering_ilp(g, family, budget);
    json rec{{"op", "lower-bound"},
             {"file", file},
             {"max_cycle_len", max_len},
             {"cycles", family.size()},
             {"packing", str(packing.value)},
             {"value", str(ilp.value)},
             {"kind", ilp.kind == BoundKind::Ilp ? "ilp" : "lp-relaxation"}};
    if (!lp_path.empty()) {
        export_covering_ilp(g, family, lp_path);
        rec["lp_file"] = lp_path;
    }
    emit(rec);
    return ilp.exhausted_budget ? kExitBudget : kExitOk;
}

int cmd_halving(const std::string& file, const std::string& coloring_file,
                const std::string& out) {
    Drawing d = read_point_text(file);
    Coloring chi = read_coloring(coloring_file, d);
    auto search = find_halving_matching(d, chi);
    json rec{{"op", "halving"}, {"file", file}, {"found", search.found}};
    if (search.found) {
        json edges = json::array();
        for (int e : search.matching.match) {
            auto [u, v] = d.edges()[e];
            edges.push_back({u, v});
        }
        rec["matching"] = edges;
        if (!out.empty()) {
            write_matching(search.matching, d, out);
            rec["matching_file"] = out;
        }
    } else {
        rec["max_matched"] = search.max_matched;
    }
    emit(rec);
    return kExitOk;
}

HalvingMatching matching_for(const Drawing& d, const Coloring& chi,
                             const std::string& matching_file) {
    if (!matching_file.empty()) {
        HalvingMatching m = read_matching(matching_file, d);
        if (!verify_halving_matching(d, chi, m))
            throw std::invalid_argument("matching file fails halving validation");
        return m;
    }
    auto search = find_halving_matching(d, chi);
    if (!search.found)
        throw std::invalid_argument("the drawing admits no halving matching for this coloring");
    return search.matching;
}

int cmd_duplicate(const std::string& file, const std::string& coloring_file, int k,
                  bool geometric, const std::string& matching_file,
                  const std::string& out_prefix) {
    Drawing d = read_point_text(file);
    Coloring chi = read_coloring(coloring_file, d);
    HalvingMatching m = matching_for(d, chi, matching_file);
    if (geometric) {
        Drawing cur = d;
        Coloring cur_chi = chi;
        HalvingMatching cur_m = m;
        DupState st = initial_state(d, chi, m);
        for (int i = 1; i <= k; ++i) {
            auto dup = geometric_duplicate(cur, cur_chi, cur_m);
            st = claim1_step(st);
            long long direct = mono_crossings(dup.drawing, dup.coloring);
            json rec{{"op", "duplicate"},
                     {"k", i},
                     {"n", dup.drawing.size()},
                     {"cr2", str(BigInt(direct))},
                     {"formula", str(st.cr2)},
                     {"verified", BigInt(direct) == st.cr2}};
            if (!out_prefix.empty()) {
                std::string base = out_prefix + ".k" + std::to_string(i);
                write_point_text(dup.drawing, base + ".pts");
                write_coloring(dup.coloring, base + ".col");
                write_matching(dup.matching, dup.drawing, base + ".match");
                rec["files"] = {base + ".pts", base + ".col", base + ".match"};
            }
            emit(rec);
            cur = dup.drawing;
            cur_chi = dup.coloring;
            cur_m = dup.matching;
        }
    } else {
        DupState st = initial_state(d, chi, m);
        for (int i = 1; i <= k; ++i) {
            st = claim1_step(st);
            emit({{"op", "duplicate"},
                  {"k", i},
                  {"n", str(BigInt(st.m0) << st.k)},
                  {"cr2", str(st.cr2)}});
        }
    }
    return kExitOk;
}

int cmd_constant(const std::string& file, const std::string& coloring_file, int digits,
                 const std::string& matching_file) {
    Drawing d = read_point_text(file);
    Coloring chi = read_coloring(coloring_file, d);
    HalvingMatching m = matching_for(d, chi, matching_file);
    auto fit = solve_coefficients(d, chi, m);
    Rational constant = crossing_constant(fit);
    emit({{"op", "constant"},
          {"file", file},
          {"m", str(BigInt(fit.effective_m0))},
          {"prestepped", fit.prestepped},
          {"A", str(fit.coefficients.a)},
          {"B", str(fit.coefficients.b)},
          {"C", str(fit.coefficients.c)},
          {"D", str(fit.coefficients.d)},
          {"constant", str(constant)},
          {"decimal", decimal_string(constant, digits)}});
    return kExitOk;
}

int cmd_scan_db(const std::string& file, DbOptions db, ScanOptions scan) {
    bool any = false;
    scan_db(file, db, scan, [&](const ScanRecord& r) {
        any = true;
        if (!r.error.empty()) {
            emit({{"op", "scan"}, {"index", r.index}, {"error", r.error}});
            return;
        }
        emit({{"op", "scan"},
              {"index", r.index},
              {"cr", str(r.cr)},
              {"cr2_upper", str(r.cr2_upper)},
              {"cr2_lower", str(r.cr2_lower)},
              {"certified", r.certified}});
    });
    (void)any;
    return kExitOk;
}

int cmd_convex(int n, const std::string& out) {
    Drawing d = convex_drawing(n);
    json rec{{"op", "convex"},
             {"n", n},
             {"cr", str(BigInt(crossing_count(d)))},
             {"two_page", str(two_page_optimum(n))}};
    if (!out.empty()) {
        write_point_text(d, out);
        rec["file"] = out;
    } else {
        std::cout << format_point_text(d);
    }
    emit(rec);
    return kExitOk;
}

int cmd_double_chain(int n, const std::string& out) {
    DoubleChain dc = double_chain(n);
    Coloring chi = double_chain_coloring(dc);
    BigInt cr = crossing_count(dc.drawing);
    BigInt mono = mono_crossings(dc.drawing, chi);
    json rec{{"op", "double-chain"},
             {"n", n},
             {"points", dc.drawing.size()},
             {"cr", str(cr)},
             {"mono", str(mono)},
             {"fraction", str(Rational(mono, cr))}};
    if (!out.empty()) {
        write_point_text(dc.drawing, out);
        write_coloring(chi, out + ".col");
        rec["file"] = out;
    }
    emit(rec);
    return kExitOk;
}

int cmd_ratio(const std::string& file, int effort) {
    Drawing d = read_point_text(file);
    auto rep = ratio_report(d, effort);
    emit({{"op", "ratio"},
          {"file", file},
          {"cr", str(rep.cr)},
          {"cr2", str(rep.cr2_best)},
          {"exact", rep.cr2_exact},
          {"crossing_free", rep.crossing_free},
          {"ratio", str(rep.ratio)}});
    return kExitOk;
}

int cmd_pipeline(const std::string& file, const std::string& coloring_file, int target_n,
                 int budget, uint64_t seed, int iterations, const std::string& out_prefix) {
    Drawing d = read_point_text(file);
    std::optional<Coloring> chi;
    if (!coloring_file.empty()) chi = read_coloring(coloring_file, d);
    PipelineOptions opts;
    opts.target_n = target_n;
    opts.budget = budget;
    opts.seed = seed;
    opts.improve_iterations = iterations;
    auto res = pipeline(d, chi ? &*chi : nullptr, opts);
    json rec{{"op", "pipeline"},
             {"file", file},
             {"seed", seed},
             {"rounds", res.rounds_run},
             {"n", res.drawing.size()},
             {"cr2", str(BigInt(res.cr2))},
             {"min_cr2", str(BigInt(res.min_cr2))}};
    if (res.constant) {
        rec["constant"] = str(*res.constant);
        rec["decimal"] = decimal_string(*res.constant, 8);
    }
    if (!res.warnings.empty()) rec["warnings"] = res.warnings;
    if (!out_prefix.empty()) {
        write_point_text(res.drawing, out_prefix + ".pts");
        write_coloring(res.coloring, out_prefix + ".col");
        rec["files"] = {out_prefix + ".pts", out_prefix + ".col"};
    }
    emit(rec);
    return kExitOk;
}

int cmd_render(const std::string& file, const std::string& coloring_file,
               const std::string& svg) {
    Drawing d = read_point_text(file);
    std::optional<Coloring> chi;
    if (!coloring_file.empty()) chi = read_coloring(coloring_file, d);
    render_svg(d, chi ? &*chi : nullptr, svg);
    emit({{"op", "render"}, {"file", file}, {"svg", svg}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-colored crossing numbers of straight-line drawings"};
    app.require_subcommand(1);

    std::string file, coloring_file, matching_file, out, lp_path, svg;
    uint64_t seed = 1, budget = 5'000'000;
    int restarts = 100, max_len = 5, k = 1, digits = 8, n = 0, effort = 2;
    int target_n = 0, pipe_budget = 4, iterations = 400;
    bool exact = false, annealing = false, geometric = false;

    auto* crossings = app.add_subcommand("crossings", "count the crossing pairs of a drawing");
    crossings->add_option("FILE", file)->required();

    auto* color_opt = app.add_subcommand("color-opt", "optimize a 2-edge-coloring");
    color_opt->add_option("FILE", file)->required();
    color_opt->add_option("--seed", seed);
    color_opt->add_option("--restarts", restarts);
    color_opt->add_flag("--exact", exact, "branch-and-bound optimum");
    color_opt->add_flag("--anneal", annealing, "simulated annealing instead of local search");
    color_opt->add_option("--budget", budget, "node budget for --exact");
    color_opt->add_option("--out", out, "write the coloring to a file");

    auto* lower = app.add_subcommand("lower-bound", "odd-cycle lower bounds on cr2");
    lower->add_option("FILE", file)->required();
    lower->add_option("--max-cycle-len", max_len);
    lower->add_option("--budget", budget);
    lower->add_option("--export-lp", lp_path, "write the covering program");

    auto* halving = app.add_subcommand("halving", "find a halving matching");
    halving->add_option("FILE", file)->required();
    halving->add_option("COLORING", coloring_file)->required();
    halving->add_option("--out", out, "write the matching to a file");

    auto* duplicate = app.add_subcommand("duplicate", "run the duplication process");
    duplicate->add_option("FILE", file)->required();
    duplicate->add_option("COLORING", coloring_file)->required();
    duplicate->add_option("--k", k, "number of rounds");
    duplicate->add_flag("--geometric", geometric, "construct coordinates (small k only)");
    duplicate->add_option("--matching", matching_file);
    duplicate->add_option("--out-prefix", out);

    auto* constant = app.add_subcommand("constant", "asymptotic crossing constant 24A/m^4");
    constant->add_option("FILE", file)->required();
    constant->add_option("COLORING", coloring_file)->required();
    constant->add_option("--digits", digits);
    constant->add_option("--matching", matching_file);

    DbOptions db;
    ScanOptions scan;
    long long limit = -1;
    bool permissive = false, big_endian = false;
    auto* scan_cmd = app.add_subcommand("scan-db", "scan an order-type database");
    scan_cmd->add_option("FILE", file)->required();
    scan_cmd->add_option("--n", db.n, "points per record")->required();
    scan_cmd->add_option("--width", db.width, "bytes per coordinate (1 or 2)");
    scan_cmd->add_flag("--big-endian", big_endian);
    scan_cmd->add_flag("--permissive", permissive, "skip degenerate records");
    scan_cmd->add_option("--jobs", scan.jobs);
    scan_cmd->add_option("--seed", scan.seed);
    scan_cmd->add_option("--restarts", scan.restarts);
    scan_cmd->add_option("--max-cycle-len", scan.max_cycle_len);
    scan_cmd->add_option("--limit", limit, "scan only the first records");

    auto* convex = app.add_subcommand("convex", "emit a convex drawing");
    convex->add_option("--n", n)->required();
    convex->add_option("--out", out);

    auto* chain = app.add_subcommand("double-chain", "emit a double chain with its coloring");
    chain->add_option("--n", n)->required();
    chain->add_option("--out", out);

    auto* ratio = app.add_subcommand("ratio", "cr2/cr ratio of a drawing");
    ratio->add_option("FILE", file)->required();
    ratio->add_option("--effort", effort);

    auto* pipe = app.add_subcommand("pipeline", "improve / enlarge / extract search");
    pipe->add_option("FILE", file)->required();
    pipe->add_option("--coloring", coloring_file);
    pipe->add_option("--target-n", target_n);
    pipe->add_option("--budget", pipe_budget);
    pipe->add_option("--seed", seed);
    pipe->add_option("--iterations", iterations);
    pipe->add_option("--out-prefix", out);

    auto* render = app.add_subcommand("render", "draw the figure as an SVG");
    render->add_option("FILE", file)->required();
    render->add_option("COLORING", coloring_file);
    render->add_option("--svg", svg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (crossings->parsed()) return cmd_crossings(file);
        if (color_opt->parsed())
            return cmd_color_opt(file, seed, restarts, exact, annealing, budget, out);
        if (lower->parsed()) return cmd_lower_bound(file, max_len, budget, lp_path);
        if (halving->parsed()) return cmd_halving(file, coloring_file, out);
        if (duplicate->parsed())
            return cmd_duplicate(file, coloring_file, k, geometric, matching_file, out);
        if (constant->parsed()) return cmd_constant(file, coloring_file, digits, matching_file);
        if (scan_cmd->parsed()) {
            db.big_endian = big_endian;
            db.permissive = permissive;
            scan.limit = limit;
            return cmd_scan_db(file, db, scan);
        }
        if (convex->parsed()) return cmd_convex(n, out);
        if (chain->parsed()) return cmd_double_chain(n, out);
        if (ratio->parsed()) return cmd_ratio(file, effort);
        if (pipe->parsed())
            return cmd_pipeline(file, coloring_file, target_n, pipe_budget, seed, iterations, out);
        if (render->parsed()) return cmd_render(file, coloring_file, svg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
