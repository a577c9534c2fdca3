#include "kblocked/blocked.hpp"
#include "kblocked/constructions.hpp"
#include "kblocked/document.hpp"
#include "kblocked/error.hpp"
#include "kblocked/search.hpp"
#include "kblocked/svg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kblocked;

namespace {

py::object fraction_type()
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls;
}

py::object to_py(const Rational& r) { return fraction_type()(py::str(r.to_string())); }

// int, Fraction or "p/q" string.
Rational to_rational(const py::handle& h)
{
    if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
    if (py::isinstance<py::bool_>(h) || py::isinstance<py::float_>(h))
        throw py::type_error("coordinates must be int, Fraction or 'p/q' strings");
    if (py::isinstance<py::int_>(h)) return Rational::parse(py::str(h).cast<std::string>());
    if (py::isinstance(h, fraction_type())) {
        auto num = py::str(h.attr("numerator")).cast<std::string>();
        auto den = py::str(h.attr("denominator")).cast<std::string>();
        return Rational::parse(num + "/" + den);
    }
    throw py::type_error("coordinates must be int, Fraction or 'p/q' strings");
}

PointConfig to_config(const py::sequence& points)
{
    std::vector<RationalPoint> pts;
    for (const auto& row : points) {
        RationalPoint p;
        for (const auto& c : row.cast<py::sequence>()) p.coords.push_back(to_rational(c));
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw PreconditionError("a point configuration needs at least one point");
    return PointConfig(std::move(pts));
}

py::list to_py(const PointConfig& config)
{
    py::list out;
    for (const auto& p : config) {
        py::tuple t(p.dim());
        for (std::size_t a = 0; a < p.dim(); ++a) t[a] = to_py(p[a]);
        out.append(t);
    }
    return out;
}

py::dict to_py(const BlockedReport& r)
{
    py::dict d;
    d["ok"] = r.ok;
    d["signature"] = r.signature ? py::cast(r.signature->sizes()) : py::none();
    py::list v;
    for (const auto& x : r.violations) v.append(py::make_tuple(x.i, x.j, to_string(x.kind)));
    d["violations"] = v;
    return d;
}

py::dict to_py(const SearchOutcome& o)
{
    py::dict d;
    d["status"] = to_string(o.status);
    d["nodes_explored"] = o.nodes_explored;
    py::list sigs;
    for (const auto& s : o.signatures_found) sigs.append(py::cast(s.sizes()));
    d["signatures_found"] = sigs;
    d["witnesses"] = o.witnesses;
    return d;
}

SearchSpec make_spec(int x_max, int y_max, int max_points, bool midpoint, bool symmetry, std::uint64_t budget,
                     int parallel, int witnesses)
{
    SearchSpec s;
    s.x_max = x_max;
    s.y_max = y_max;
    s.max_points = max_points;
    s.require_midpoint_blocked = midpoint;
    s.symmetry_reduction = symmetry;
    s.node_budget = budget;
    s.parallel_width = parallel;
    s.max_witnesses = witnesses;
    return s;
}

KSetSignature to_signature(const py::object& o)
{
    if (py::isinstance<py::str>(o)) return KSetSignature::parse(o.cast<std::string>());
    return KSetSignature(o.cast<std::vector<int>>());
}

} // namespace

PYBIND11_MODULE(_kblocked, m)
{
    m.doc() = "Exact k-blocked point sets: verification, constructions and grid search.";

    py::register_exception<NotMultipartite>(m, "NotMultipartite", PyExc_ValueError);
    py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

    py::class_<ColouredPointSet>(m, "ColouredPointSet")
        .def(py::init([](const py::sequence& points, std::vector<int> colours) {
                 return ColouredPointSet(to_config(points), std::move(colours));
             }),
             py::arg("points"), py::arg("colours"))
        .def_property_readonly("points", [](const ColouredPointSet& s) { return to_py(s.config()); })
        .def_property_readonly("colours", &ColouredPointSet::colours)
        .def_property_readonly("dim", &ColouredPointSet::dim)
        .def_property_readonly("colour_count", &ColouredPointSet::colour_count)
        .def("signature", [](const ColouredPointSet& s) { return signature(s).sizes(); })
        .def("__len__", &ColouredPointSet::size)
        .def("__eq__", [](const ColouredPointSet& a, const ColouredPointSet& b) { return a == b; })
        .def("__repr__", [](const ColouredPointSet& s) {
            return "<ColouredPointSet " + std::to_string(s.size()) + " points, dim " + std::to_string(s.dim()) + ", " +
                   std::to_string(s.colour_count()) + " colours>";
        });

    // geometry
    m.def("orientation", [](const py::sequence& p, const py::sequence& q, const py::sequence& r) {
        auto c = to_config(py::make_tuple(p, q, r));
        return orientation(c[0], c[1], c[2]);
    });
    m.def("is_between", [](const py::sequence& x, const py::sequence& v, const py::sequence& w) {
        std::vector<RationalPoint> pts;
        for (const auto& row : {x, v, w}) {
            RationalPoint p;
            for (const auto& c : row) p.coords.push_back(to_rational(c));
            pts.push_back(std::move(p));
        }
        return is_between(pts[0], pts[1], pts[2]);
    });
    m.def("max_collinear", [](const py::sequence& pts) { return max_collinear(to_config(pts)); });
    m.def("is_general_position", [](const py::sequence& pts) { return is_general_position(to_config(pts)); });
    m.def("count_midpoints", [](const py::sequence& pts) { return count_midpoints(to_config(pts)); });
    m.def("convex_hull", [](const py::sequence& pts) { return convex_hull(to_config(pts)); });
    m.def("find_empty_convex_polygon",
          [](const py::sequence& pts, int r) { return find_empty_convex_polygon(to_config(pts), r); },
          py::arg("points"), py::arg("r"));

    // visibility
    m.def("visibility_edges", [](const py::sequence& pts) {
        auto g = visibility_graph(to_config(pts));
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g.adjacent(i, j)) edges.emplace_back(i, j);
        return edges;
    });
    m.def("blockers", [](const py::sequence& pts, std::size_t i, std::size_t j) {
        auto c = to_config(pts);
        if (i >= c.size() || j >= c.size()) throw py::index_error("point index out of range");
        return blockers(c, i, j);
    });
    m.def(
        "occlusion_free_projection",
        [](const py::sequence& pts, std::uint64_t seed) {
            auto p = occlusion_free_projection(to_config(pts), seed);
            py::list matrix;
            for (const auto& e : p.matrix) matrix.append(to_py(e));
            return py::make_tuple(to_py(p.image), matrix, p.attempts);
        },
        py::arg("points"), py::arg("seed") = 0);

    // blocked
    m.def("verify_blocked", [](const ColouredPointSet& s) { return to_py(verify_blocked(s)); });
    m.def("verify_midpoint_blocked", [](const ColouredPointSet& s) {
        auto r = verify_midpoint_blocked(s);
        return py::make_tuple(r.ok, r.failing_pair ? py::cast(*r.failing_pair) : py::none());
    });
    m.def("infer_colouring", [](const py::sequence& pts) { return infer_colouring(to_config(pts)); });
    m.def("audit_lemmas", [](const ColouredPointSet& s) {
        auto a = audit_lemmas(s);
        py::dict d;
        d["at_most_three_collinear"] = a.at_most_three_collinear;
        d["classes_in_general_position"] = a.classes_in_general_position;
        d["classes_at_most_four"] = a.classes_at_most_four;
        d["at_most_twelve_points"] = a.at_most_twelve_points;
        d["triangles_see_every_colour"] = a.triangles_see_every_colour;
        d["all_pass"] = a.all_pass();
        return d;
    });

    // constructions
    m.def("canonical_names", &canonical_names);
    m.def("canonical", &canonical, py::arg("name"));
    m.def("grid_3d", &grid_3d, py::arg("d"));
    m.def("augment", &augment, py::arg("set"), py::arg("m"));
    m.def("product", &product, py::arg("first"), py::arg("second"));
    m.def("power", &power, py::arg("set"), py::arg("i"));
    m.def("turan_lines", [](int k, int n) { return turan_lines(k, n).lines; }, py::arg("k"), py::arg("n"));
    m.def(
        "verify_line_cover",
        [](int k, int n, const std::vector<std::vector<int>>& lines) {
            auto r = verify_line_cover(LineCover{k, n, lines});
            py::dict d;
            d["lines_are_edges_or_induced_paths"] = r.lines_are_edges_or_induced_paths;
            d["every_pair_in_exactly_one_line"] = r.every_pair_in_exactly_one_line;
            d["every_line_has_common_neighbour"] = r.every_line_has_common_neighbour;
            d["lines_partition_edges"] = r.lines_partition_edges;
            d["pairs_covered"] = r.pairs_covered;
            d["all_pass"] = r.all_pass();
            return d;
        },
        py::arg("k"), py::arg("n"), py::arg("lines"));

    // search
    m.def(
        "enumerate_blocked",
        [](int x_max, int y_max, int max_points, bool midpoint, bool symmetry, std::uint64_t budget, int parallel) {
            auto spec = make_spec(x_max, y_max, max_points, midpoint, symmetry, budget, parallel, 1);
            SearchOutcome out;
            {
                py::gil_scoped_release release;
                out = enumerate_blocked(spec);
            }
            return to_py(out);
        },
        py::arg("x_max") = 4, py::arg("y_max") = 4, py::arg("max_points") = 6, py::arg("midpoint") = false,
        py::arg("symmetry") = true, py::arg("budget") = 100'000'000, py::arg("parallel") = 1);
    for (const char* name : {"find_blocked", "certify_absent"}) {
        const bool absent = std::string(name) == "certify_absent";
        m.def(
            name,
            [absent](const py::object& target, int x_max, int y_max, int max_points, bool midpoint, bool symmetry,
                     std::uint64_t budget, int parallel, int witnesses) {
                auto sig = to_signature(target);
                auto spec = make_spec(x_max, y_max, max_points > 0 ? max_points : sig.total(), midpoint, symmetry,
                                      budget, parallel, witnesses);
                SearchOutcome out;
                {
                    py::gil_scoped_release release;
                    out = absent ? certify_absent(sig, spec) : find_blocked(sig, spec);
                }
                return to_py(out);
            },
            py::arg("target"), py::arg("x_max") = 4, py::arg("y_max") = 4, py::arg("max_points") = 0,
            py::arg("midpoint") = false, py::arg("symmetry") = true, py::arg("budget") = 100'000'000,
            py::arg("parallel") = 1, py::arg("witnesses") = 1);
    }

    // documents and drawing
    m.def(
        "dump_document",
        [](const ColouredPointSet& s, const std::map<std::string, std::string>& metadata) {
            return dump_document(ConfigDocument{s, metadata});
        },
        py::arg("set"), py::arg("metadata") = std::map<std::string, std::string>{});
    m.def("parse_document", [](const std::string& text) { return parse_config_document(text).set; });
    m.def("render_svg", [](const ColouredPointSet& s) { return render_svg(s); });
}
