#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monocross/coloring.hpp"
#include "monocross/duplication.hpp"
#include "monocross/io.hpp"
#include "monocross/lower_bounds.hpp"
#include "monocross/pipeline.hpp"
#include "monocross/special_drawings.hpp"

namespace py = pybind11;
using namespace monocross;

namespace {

py::int_ to_int(const BigInt& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(format_rational(r));
}

Rational rational_from(py::handle obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    // Fraction or anything with numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rational(BigInt(py::str(obj.attr("numerator")).cast<std::string>()),
                        BigInt(py::str(obj.attr("denominator")).cast<std::string>()));
    throw py::type_error("coordinates must be int, 'p/q' strings or Fraction");
}

Drawing drawing_from_points(const py::iterable& points) {
    std::vector<Point> pts;
    for (py::handle item : points) {
        auto pair = item.cast<py::sequence>();
        pts.push_back({rational_from(pair[0]), rational_from(pair[1])});
    }
    return Drawing::complete(std::move(pts));
}

py::dict coloring_result_dict(const ColoringResult& res) {
    py::dict out;
    out["coloring"] = coloring_string(res.coloring);
    out["mono"] = res.mono_count;
    out["restarts"] = res.restarts_used;
    return out;
}

}  // namespace

PYBIND11_MODULE(_monocross, m) {
    m.doc() = "2-colored crossing numbers of straight-line drawings";

    py::register_exception<GeneralPositionError>(m, "GeneralPositionError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<Drawing>(m, "Drawing")
        .def(py::init(&drawing_from_points), py::arg("points"),
             "complete drawing from (x, y) pairs; coordinates may be ints, "
             "'p/q' strings or Fractions")
        .def_property_readonly("n", &Drawing::size)
        .def_property_readonly("edge_count", &Drawing::edge_count)
        .def_property_readonly("complete", &Drawing::complete_flag)
        .def("points",
             [](const Drawing& d) {
                 py::list out;
                 for (const auto& p : d.points())
                     out.append(py::make_tuple(to_fraction(p.x), to_fraction(p.y)));
                 return out;
             })
        .def("edges", [](const Drawing& d) { return d.edges(); })
        .def("edge_index", &Drawing::edge_index)
        .def("__repr__", [](const Drawing& d) {
            return "<Drawing n=" + std::to_string(d.size()) + " edges=" +
                   std::to_string(d.edge_count()) + ">";
        });

    m.def("read_points", &read_point_text, py::arg("path"));
    m.def("write_points", &write_point_text, py::arg("drawing"), py::arg("path"));
    m.def("convex_drawing", &convex_drawing, py::arg("n"));
    m.def("random_drawing", &random_drawing, py::arg("n"), py::arg("seed"),
          py::arg("coord_range") = 1 << 16);

    m.def("crossing_count", [](const Drawing& d) { return crossing_count(d); });
    m.def("crossing_pairs", [](const Drawing& d) { return crossing_pairs(d); });
    m.def("intersection_adjacency",
          [](const Drawing& d) { return intersection_graph(d).adjacency; });

    m.def("mono_crossings", [](const Drawing& d, const std::string& chi) {
        return mono_crossings(d, coloring_from_string(chi));
    });
    m.def(
        "random_coloring",
        [](const Drawing& d, uint64_t seed) { return coloring_result_dict(random_coloring(d, seed)); },
        py::arg("drawing"), py::arg("seed"));
    m.def(
        "local_search",
        [](const Drawing& d, uint64_t seed, int restarts) {
            return coloring_result_dict(local_search(d, seed, restarts));
        },
        py::arg("drawing"), py::arg("seed") = 1, py::arg("restarts") = 1);
    m.def(
        "anneal",
        [](const Drawing& d, uint64_t seed, int restarts) {
            AnnealSchedule schedule;
            schedule.restarts = restarts;
            return coloring_result_dict(anneal(d, seed, schedule));
        },
        py::arg("drawing"), py::arg("seed") = 1, py::arg("restarts") = 1);
    m.def(
        "exact_cr2",
        [](const Drawing& d, uint64_t budget) {
            auto res = exact_cr2(d, budget);
            py::dict out;
            out["optimal"] = res.optimal;
            out["value"] = res.value;
            out["lower_bound"] = res.lower_bound;
            out["coloring"] = coloring_string(res.coloring);
            out["nodes"] = res.nodes_used;
            return out;
        },
        py::arg("drawing"), py::arg("budget") = uint64_t(50'000'000));

    m.def(
        "lower_bound",
        [](const Drawing& d, int max_cycle_len, uint64_t budget) {
            auto g = intersection_graph(d);
            auto family = enumerate_odd_cycles(g, max_cycle_len);
            auto packing = cycle_packing_bound(g, family);
            auto ilp = solve_covering_ilp(g, family, budget);
            py::dict out;
            out["cycles"] = family.size();
            out["packing"] = packing.value;
            out["value"] = ilp.value;
            out["kind"] = ilp.kind == BoundKind::Ilp ? "ilp" : "lp-relaxation";
            return out;
        },
        py::arg("drawing"), py::arg("max_cycle_len") = 5,
        py::arg("budget") = uint64_t(2'000'000));
    m.def("export_covering_lp", [](const Drawing& d, int max_cycle_len, const std::string& path) {
        auto g = intersection_graph(d);
        export_covering_ilp(g, enumerate_odd_cycles(g, max_cycle_len), path);
    });

    m.def("two_page_optimum", [](int n) { return to_int(two_page_optimum(n)); });
    m.def("lemma1_constant",
          [](int m_, long long c_hat) { return to_fraction(lemma1_constant(m_, c_hat)); });
    m.def("crossing_lemma_constant", [] {
        auto b = crossing_lemma_constant();
        return py::make_tuple(to_fraction(b.value), b.derivation);
    });

    m.def(
        "find_halving_matching",
        [](const Drawing& d, const std::string& chi) -> py::object {
            auto search = find_halving_matching(d, coloring_from_string(chi));
            if (!search.found) return py::none();
            py::list out;
            for (int e : search.matching.match) out.append(d.edges()[e]);
            return out;
        },
        py::arg("drawing"), py::arg("coloring"));

    m.def(
        "duplicate_cr2",
        [](const Drawing& d, const std::string& chi_str, int k) {
            Coloring chi = coloring_from_string(chi_str);
            auto search = find_halving_matching(d, chi);
            if (!search.found) throw std::invalid_argument("no halving matching");
            DupState st = initial_state(d, chi, search.matching);
            py::list out;
            for (int i = 0; i < k; ++i) {
                st = claim1_step(st);
                out.append(to_int(st.cr2));
            }
            return out;
        },
        py::arg("drawing"), py::arg("coloring"), py::arg("k") = 1,
        "exact monochromatic crossing counts after 1..k duplication rounds");

    m.def(
        "crossing_constant",
        [](const Drawing& d, const std::string& chi_str) {
            Coloring chi = coloring_from_string(chi_str);
            auto search = find_halving_matching(d, chi);
            if (!search.found) throw std::invalid_argument("no halving matching");
            return to_fraction(crossing_constant(d, chi, search.matching));
        },
        py::arg("drawing"), py::arg("coloring"));

    m.def(
        "double_chain",
        [](int n) {
            DoubleChain dc = double_chain(n);
            return py::make_tuple(dc.drawing, coloring_string(double_chain_coloring(dc)));
        },
        py::arg("n"));

    m.def(
        "ratio",
        [](const Drawing& d, int effort) {
            auto rep = ratio_report(d, effort);
            py::dict out;
            out["cr"] = to_int(rep.cr);
            out["cr2"] = to_int(rep.cr2_best);
            out["exact"] = rep.cr2_exact;
            out["ratio"] = to_fraction(rep.ratio);
            return out;
        },
        py::arg("drawing"), py::arg("effort") = 2);

    m.def(
        "pipeline",
        [](const Drawing& d, uint64_t seed, int target_n, int budget, int iterations) {
            PipelineOptions opts;
            opts.seed = seed;
            opts.target_n = target_n;
            opts.budget = budget;
            opts.improve_iterations = iterations;
            auto res = pipeline(d, nullptr, opts);
            py::dict out;
            out["drawing"] = res.drawing;
            out["coloring"] = coloring_string(res.coloring);
            out["cr2"] = res.cr2;
            out["min_cr2"] = res.min_cr2;
            out["constant"] = res.constant ? to_fraction(*res.constant) : py::object(py::none());
            out["warnings"] = res.warnings;
            return out;
        },
        py::arg("drawing"), py::arg("seed") = 1, py::arg("target_n") = 0,
        py::arg("budget") = 4, py::arg("iterations") = 400);
}
