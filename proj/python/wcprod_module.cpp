#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <thread>

#include "wcprod/cli.hpp"
#include "wcprod/errors.hpp"
#include "wcprod/families.hpp"
#include "wcprod/graph_io.hpp"
#include "wcprod/harness.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/kn_analysis.hpp"
#include "wcprod/products.hpp"
#include "wcprod/serialize.hpp"

namespace py = pybind11;
using namespace wcprod;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Vertex> members(VertexSet s) { return to_json(s).get<std::vector<Vertex>>(); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> list;
    for (auto [u, v] : edges) list.push_back({u, v});
    return Graph::from_edge_list(n, list);
}

Instance make_instance(const Graph& g, const std::optional<Graph>& h, std::optional<int> clique) {
    if (h && clique) throw Error("give either a second graph or a clique order, not both");
    if (h) return Instance::pair(g, *h);
    if (clique) return Instance::with_clique(g, *clique);
    return Instance::single(g);
}

}  // namespace

PYBIND11_MODULE(_wcprod, m) {
    m.doc() = "Well-covered direct products of graphs";
    m.attr("__version__") = std::string(kVersion);

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<GraphError>(m, "GraphError", error);
    py::register_exception<CapacityError>(m, "CapacityError", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_static("parse", [](const std::string& s) { return parse_graph_argument(s); },
                    "graph6, a family spec such as 'cycle:7', or '@path'")
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.first, e.second);
                 return out;
             })
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", [](const Graph& g, Vertex v) { return members(g.neighbors(v)); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("structure", [](const Graph& g) { return to_python(structural_facts(g)); })
        .def("__len__", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    m.def("family", [](const std::string& spec) { return FamilySpec::parse(spec).build(); });
    m.def("family_tags", &family_tags);

    m.def("alpha", [](const Graph& g) { return alpha(g, g.vertices()); });
    m.def("i_number", [](const Graph& g) { return i_number(g, g.vertices()); });
    m.def("is_well_covered", [](const Graph& g) { return is_well_covered(g, g.vertices()); });
    m.def("is_very_well_covered", &is_very_well_covered);
    m.def("well_covered_report", [](const Graph& g) { return to_python(to_json(well_covered_report(g))); });
    m.def("maximal_independent_sets", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (VertexSet s : maximal_independent_sets(g)) out.push_back(members(s));
        return out;
    });
    m.def("isolatable_vertices", [](const Graph& g) { return members(isolatable_vertices(g)); });

    m.def("direct_product", [](const Graph& g, const Graph& h) { return direct_product(g, h).graph(); });
    m.def(
        "kn_alpha_i",
        [](const Graph& g, int n, std::uint64_t budget) { return to_python(to_json(kn_alpha_i(g, n, budget))); },
        py::arg("g"), py::arg("n"), py::arg("node_budget") = kDefaultNodeBudget);

    m.def("claim_ids", [] { return ClaimRegistry::standard().ids(); });
    m.def(
        "verify_claim",
        [](const std::string& id, const Graph& g, std::optional<Graph> h, std::optional<int> clique) {
            return to_python(to_json(ClaimRegistry::standard().verify(id, make_instance(g, h, clique))));
        },
        py::arg("claim"), py::arg("g"), py::arg("h") = py::none(), py::arg("clique") = py::none());
    m.def(
        "run_suite",
        [](std::vector<std::string> claims, int max_n, int jobs) {
            SuiteCorpusConfig config;
            config.single_max_n = std::min(max_n, 7);
            config.pair_max_n = std::min(max_n, 6);
            config.kn_max_n = std::min(max_n, 5);
            SuiteOptions options;
            options.jobs = jobs > 0 ? jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
            nlohmann::json report;
            {
                py::gil_scoped_release release;
                report = run_suite(ClaimRegistry::standard(), claims, standard_instances(config), options).to_json();
            }
            return to_python(report);
        },
        py::arg("claims") = std::vector<std::string>{}, py::arg("max_n") = 4, py::arg("jobs") = 1);
}
