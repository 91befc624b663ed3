#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hec/constructions.hpp"
#include "hec/decompositions.hpp"
#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "hec/serialize.hpp"
#include "hec/solver.hpp"

namespace py = pybind11;
using namespace hec;

namespace {

SolverOptions options_from(std::uint64_t node_budget) { return SolverOptions{node_budget}; }

}  // namespace

PYBIND11_MODULE(hecpy, m) {
    m.doc() = "Homogeneous edge-colorings of loopless multigraphs: generators, verifier, "
              "closed-form constructions, Hamiltonian decompositions and an exact solver.";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::enum_<FamilyKind>(m, "FamilyKind")
        .value("Complete", FamilyKind::Complete)
        .value("CompleteBipartite", FamilyKind::CompleteBipartite)
        .value("Path", FamilyKind::Path)
        .value("Cycle", FamilyKind::Cycle)
        .value("Star", FamilyKind::Star)
        .value("Wheel", FamilyKind::Wheel)
        .value("Tree", FamilyKind::Tree)
        .value("Custom", FamilyKind::Custom);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def_readonly("kind", &FamilySpec::kind)
        .def_readonly("params", &FamilySpec::params)
        .def("__repr__", [](const FamilySpec& f) {
            std::string out = "FamilySpec(" + to_string(f.kind);
            for (long long p : f.params) out += ", " + std::to_string(p);
            return out + ")";
        });

    py::class_<Edge>(m, "Edge")
        .def_readonly("id", &Edge::id)
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("copy", &Edge::copy)
        .def(py::self == py::self)
        .def("__repr__", [](const Edge& e) {
            return "Edge(id=" + std::to_string(e.id) + ", u=" + std::to_string(e.u) +
                   ", v=" + std::to_string(e.v) + ", copy=" + std::to_string(e.copy) + ")";
        });

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<int, const std::vector<std::pair<VertexId, VertexId>>&,
                      std::optional<FamilySpec>>(),
             py::arg("n"), py::arg("endpoints"), py::arg("family") = std::nullopt)
        .def_property_readonly("n", &Multigraph::vertex_count)
        .def("vertex_count", &Multigraph::vertex_count)
        .def("edge_count", &Multigraph::edge_count)
        .def("edges", &Multigraph::edges)
        .def("degree", &Multigraph::degree, py::arg("x"))
        .def("incident_edges", &Multigraph::incident_edges, py::arg("x"))
        .def("edge_ids_between", &Multigraph::edge_ids_between, py::arg("u"), py::arg("v"))
        .def("max_degree", &Multigraph::max_degree)
        .def("is_eulerian", &Multigraph::is_eulerian)
        .def("is_tree", &Multigraph::is_tree)
        .def("is_cycle_graph", &Multigraph::is_cycle_graph)
        .def_property_readonly("family", &Multigraph::family)
        .def("to_json", [](const Multigraph& g) { return graph_to_json(g).dump(2); })
        .def_static("from_json", [](const std::string& text) {
            return graph_from_json(nlohmann::json::parse(text));
        })
        .def("to_dot", [](const Multigraph& g, const EdgeColoring* c) { return to_dot(g, c); },
             py::arg("coloring") = nullptr)
        .def("__repr__", [](const Multigraph& g) {
            return "Multigraph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete", &complete, py::arg("n"), py::arg("lam") = 1);
    m.def("complete_bipartite", &complete_bipartite, py::arg("m"), py::arg("n"),
          py::arg("lam") = 1);
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("star", &star, py::arg("n"));
    m.def("wheel", &wheel, py::arg("n"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<int, std::vector<int>>(), py::arg("m"), py::arg("colors"))
        .def_readonly("m", &EdgeColoring::m)
        .def_readonly("colors", &EdgeColoring::colors)
        .def("to_json", [](const EdgeColoring& c) { return coloring_to_json(c).dump(2); })
        .def_static("from_json", [](const std::string& text) {
            return coloring_from_json(nlohmann::json::parse(text));
        })
        .def("__repr__", [](const EdgeColoring& c) {
            return "EdgeColoring(m=" + std::to_string(c.m) + ", |E|=" +
                   std::to_string(c.colors.size()) + ")";
        });

    py::class_<VertexSpectrum>(m, "VertexSpectrum")
        .def_readonly("vertex", &VertexSpectrum::vertex)
        .def_readonly("degree", &VertexSpectrum::degree)
        .def_readonly("q", &VertexSpectrum::q)
        .def_readonly("r", &VertexSpectrum::r)
        .def_readonly("counts", &VertexSpectrum::counts);

    py::class_<Violation>(m, "Violation")
        .def_readonly("vertex", &Violation::vertex)
        .def_readonly("color", &Violation::color)
        .def_readonly("count", &Violation::count)
        .def_readonly("allowed", &Violation::allowed);

    py::class_<HomogeneityReport>(m, "HomogeneityReport")
        .def_readonly("ok", &HomogeneityReport::ok)
        .def_readonly("spectra", &HomogeneityReport::spectra)
        .def_readonly("first_violation", &HomogeneityReport::first_violation)
        .def("to_json", [](const HomogeneityReport& r) { return report_to_json(r).dump(2); });

    m.def("verify", &verify, py::arg("g"), py::arg("c"));
    m.def("spectrum", &spectrum, py::arg("g"), py::arg("c"), py::arg("x"));
    m.def("is_proper", &is_proper, py::arg("g"), py::arg("c"));
    m.def("count_monochromatic_vertices", &count_monochromatic_vertices, py::arg("cycle_graph"),
          py::arg("c"));

    py::class_<HamiltonianDecomposition>(m, "HamiltonianDecomposition")
        .def_readonly("n", &HamiltonianDecomposition::n)
        .def_readonly("cycles", &HamiltonianDecomposition::cycles)
        .def("to_json",
             [](const HamiltonianDecomposition& d) { return decomposition_to_json(d).dump(2); });

    m.def("walecki_decompose", &walecki_decompose, py::arg("n"));
    m.def(
        "verify_decomposition",
        [](const HamiltonianDecomposition& d) {
            std::string reason;
            const bool ok = verify_decomposition(d, &reason);
            return py::make_tuple(ok, reason);
        },
        py::arg("d"), "Returns (ok, reason); reason is empty when ok.");

    py::enum_<ColoringVariant>(m, "ColoringVariant")
        .value("Auto", ColoringVariant::Auto)
        .value("Cycles", ColoringVariant::Cycles)
        .value("Circulant", ColoringVariant::Circulant)
        .value("Direct", ColoringVariant::Direct);

    py::class_<ConstructionResult>(m, "ConstructionResult")
        .def_readonly("coloring", &ConstructionResult::coloring)
        .def_readonly("theorem", &ConstructionResult::theorem)
        .def_readonly("variant", &ConstructionResult::variant);

    m.def("color_complete_even", &color_complete_even, py::arg("n"));
    m.def("color_complete_1mod4", &color_complete_1mod4, py::arg("n"),
          py::arg("variant") = ColoringVariant::Auto);
    m.def("color_complete_3mod4", &color_complete_3mod4, py::arg("n"),
          py::arg("variant") = ColoringVariant::Auto);
    m.def("color_lambda_complete", &color_lambda_complete, py::arg("n"), py::arg("lam"));
    m.def("color_tree", &color_tree, py::arg("g"));
    m.def("color_complete_bipartite", &color_complete_bipartite, py::arg("m_part"),
          py::arg("n_part"), py::arg("lam") = 1);
    m.def("color_wheel", &color_wheel, py::arg("n"));
    m.def("color_path", &color_path, py::arg("n"));
    m.def("color_cycle", &color_cycle, py::arg("n"));
    m.def(
        "color_eulerian",
        [](const Multigraph& g, std::uint64_t node_budget) {
            return color_eulerian(g, options_from(node_budget));
        },
        py::arg("g"), py::arg("node_budget") = SolverOptions{}.node_budget);

    py::class_<FeasibilityResult>(m, "FeasibilityResult")
        .def_readonly("feasible", &FeasibilityResult::feasible)
        .def_readonly("witness", &FeasibilityResult::witness)
        .def_readonly("nodes_explored", &FeasibilityResult::nodes_explored);

    py::class_<ChiTildeResult>(m, "ChiTildeResult")
        .def_readonly("value", &ChiTildeResult::value)
        .def_readonly("witness", &ChiTildeResult::witness)
        .def_readonly("infeasible_below", &ChiTildeResult::infeasible_below)
        .def_readonly("nodes_explored", &ChiTildeResult::nodes_explored)
        .def("to_json", [](const ChiTildeResult& r) { return chi_result_to_json(r).dump(2); });

    m.def(
        "feasible",
        [](const Multigraph& g, int m_colors, std::uint64_t node_budget) {
            return feasible(g, m_colors, options_from(node_budget));
        },
        py::arg("g"), py::arg("m"), py::arg("node_budget") = SolverOptions{}.node_budget);
    m.def(
        "chi_tilde",
        [](const Multigraph& g, std::uint64_t node_budget) {
            return chi_tilde(g, options_from(node_budget));
        },
        py::arg("g"), py::arg("node_budget") = SolverOptions{}.node_budget);
    m.def("all_two_colorings_satisfy", &all_two_colorings_satisfy, py::arg("g"),
          py::arg("predicate"), py::arg("max_edges") = 16);
    m.def("greedy_proper_coloring", &greedy_proper_coloring, py::arg("g"));
}
