#include "toricreg/cli.hpp"
#include "toricreg/error.hpp"
#include "toricreg/formulas.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/ideal.hpp"
#include "toricreg/points.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace toricreg;

namespace {

ExponentVec to_exponents(const std::vector<std::uint32_t>& v) { return ExponentVec(v); }

py::dict profile_dict(const HilbertProfile& p) {
    py::dict d;
    d["values"] = p.values;
    d["regularity"] = p.regularity ? py::cast(*p.regularity) : py::none();
    d["degree"] = p.degree;
    d["engine"] = p.engine == RankEngine::Characters ? "characters" : "elimination";
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Regularity and degree of K[E_G]/I(X) for graph-parameterized toric sets";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Multigraph>(m, "Graph")
        .def_property_readonly("num_vertices", &Multigraph::num_vertices)
        .def_property_readonly("num_edges", &Multigraph::num_edges)
        .def_property_readonly("edges",
                               [](const Multigraph& g) {
                                   std::vector<std::pair<Vertex, Vertex>> out;
                                   for (const Edge& e : g.edges()) out.emplace_back(e.u, e.w);
                                   return out;
                               })
        .def("is_simple", &Multigraph::is_simple)
        .def("__repr__", &Multigraph::describe);

    m.def("parse_graph", [](const std::string& spec) { return parse_graph_spec(spec).graph; },
          py::arg("spec"));
    m.def(
        "degree",
        [](const std::string& spec, std::uint32_t q) {
            return degree_formula(graph_stats(parse_graph_spec(spec).graph), q);
        },
        py::arg("spec"), py::arg("q"));
    m.def(
        "count_points",
        [](const std::string& spec, std::uint32_t q) { return count_points(parse_graph_spec(spec).graph, q); },
        py::arg("spec"), py::arg("q"));
    m.def(
        "regularity_rank",
        [](const std::string& spec, std::uint32_t q) {
            return profile_dict(regularity_rank(parse_graph_spec(spec).graph, q));
        },
        py::arg("spec"), py::arg("q"));
    m.def(
        "regularity_sieve",
        [](const std::string& spec, std::uint32_t q, EdgeIndex edge) {
            return regularity_sieve(parse_graph_spec(spec).graph, q, edge);
        },
        py::arg("spec"), py::arg("q"), py::arg("edge") = 0);
    m.def(
        "formula",
        [](const std::string& spec, std::uint32_t q) {
            const FormulaResult f = formula_for_spec(parse_graph_spec(spec), q);
            return py::make_tuple(f.value ? py::cast(*f.value) : py::none(), f.rule, f.reason);
        },
        py::arg("spec"), py::arg("q"));
    m.def(
        "reg_parallel",
        [](const std::vector<unsigned>& lengths, std::uint32_t q) {
            return reg_parallel(ParallelSpec{lengths}, q);
        },
        py::arg("lengths"), py::arg("q"));
    m.def(
        "binomial_in_ideal",
        [](const std::string& spec, std::uint32_t q, const std::vector<std::uint32_t>& a,
           const std::vector<std::uint32_t>& b) {
            return binomial_in_ideal(parse_graph_spec(spec).graph, q, to_exponents(a), to_exponents(b));
        },
        py::arg("spec"), py::arg("q"), py::arg("a"), py::arg("b"));
    m.def(
        "in_ideal_plus_edge",
        [](const std::string& spec, std::uint32_t q, const std::vector<std::uint32_t>& a, EdgeIndex j) {
            const Multigraph g = parse_graph_spec(spec).graph;
            const ExponentVec e = to_exponents(a);
            ReachTable reach(g, q);
            reach.extend_to(static_cast<unsigned>(e.degree()));
            return monomial_in_ideal_plus_edge(g, q, e, j, reach);
        },
        py::arg("spec"), py::arg("q"), py::arg("a"), py::arg("edge"));
    m.def(
        "report_json",
        [](const std::string& spec, std::uint32_t q, bool bounds) {
            ReportOptions opts;
            opts.bounds = bounds;
            return report_to_json(compute_report(parse_graph_spec(spec), q, opts));
        },
        py::arg("spec"), py::arg("q"), py::arg("bounds") = false);
    m.def(
        "run_command",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
