#include "hadwiger/certificate_json.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/generate.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/invariants.hpp"
#include "hadwiger/minors.hpp"
#include "hadwiger/pipeline.hpp"
#include "hadwiger/theorems.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hadwiger;

namespace {

std::vector<std::vector<int>> sets_to_lists(const std::vector<VertexSet>& sets)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) out.push_back(s.to_vector());
    return out;
}

MinorSearchOptions with_budget(std::optional<double> seconds)
{
    MinorSearchOptions o;
    if (seconds)
        o.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
    return o;
}

std::string status_name(MinorStatus s) { return to_string(s); }

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Certificate-producing checks for graphs with independence number at most 2";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("fingerprint", [](const Graph& g) { return fingerprint(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("complement", [](const Graph& g) { return complement(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    auto fam = m.def_submodule("families", "named graphs");
    fam.def("complete", &families::complete);
    fam.def("edgeless", &families::edgeless);
    fam.def("path", &families::path);
    fam.def("cycle", &families::cycle);
    fam.def("wheel", &families::wheel, py::arg("rim"));
    fam.def("octahedron", &families::octahedron);
    fam.def("petersen", &families::petersen);
    fam.def("house", &families::house);
    fam.def("blown_up_c5", &families::blown_up_c5, py::arg("sizes"));

    m.def("independence_number", &independence_number);
    m.def("clique_number", &clique_number);
    m.def("maximum_clique", [](const Graph& g) { return maximum_clique(g).to_vector(); });
    m.def("max_matching", &max_matching);
    m.def("chromatic_number", &chromatic_number, py::call_guard<py::gil_scoped_release>());
    m.def(
        "chromatic_coloring",
        [](const Graph& g) {
            py::gil_scoped_release nogil;
            return chromatic_coloring(g).color;
        },
        "colour of each vertex in an optimal colouring");

    m.def(
        "hadwiger_number",
        [](const Graph& g, std::optional<double> budget) {
            HadwigerResult r;
            {
                py::gil_scoped_release nogil;
                r = hadwiger_number(g, with_budget(budget));
            }
            py::dict d;
            d["h"] = r.h;
            d["exact"] = r.exact;
            d["branch_sets"] = sets_to_lists(r.witness.branch_sets);
            return d;
        },
        py::arg("g"), py::arg("budget") = py::none(),
        "largest t with a K_t minor; with a budget in seconds h may be a lower bound (exact=False)");
    m.def(
        "clique_minor",
        [](const Graph& g, int t, std::optional<double> budget) {
            MinorSearchResult r;
            {
                py::gil_scoped_release nogil;
                r = search_clique_minor(g, t, with_budget(budget));
            }
            py::dict d;
            d["status"] = status_name(r.status);
            d["branch_sets"] = r.witness ? py::cast(sets_to_lists(r.witness->branch_sets)) : py::none();
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("g"), py::arg("t"), py::arg("budget") = py::none());
    m.def(
        "validate_minor",
        [](const Graph& g, const std::vector<std::vector<int>>& branch_sets) {
            MinorWitness w;
            for (const auto& b : branch_sets) {
                VertexSet s;
                for (int v : b) s.insert(v);
                w.branch_sets.push_back(s);
            }
            return validate_minor_witness(g, w);
        },
        py::arg("g"), py::arg("branch_sets"));

    m.def(
        "find_induced",
        [](const Graph& g, const std::string& kind) -> std::optional<std::vector<int>> {
            auto w = find_induced(g, pattern_kind_from_string(kind));
            if (!w) return std::nullopt;
            return w->mapping;
        },
        py::arg("g"), py::arg("kind"), "kind is one of C5, W5, CO_STAR_5, INDEPENDENT_3");

    m.def(
        "theorem2_check",
        [](const Graph& g) {
            Theorem2Report r;
            {
                py::gil_scoped_release nogil;
                r = theorem2_check(g);
            }
            py::dict d;
            d["n"] = r.n;
            d["h"] = r.h;
            d["chi"] = r.chi;
            d["exact"] = r.exact;
            d["h_at_least_chi"] = r.h_at_least_chi;
            d["h_at_least_half"] = r.h_at_least_half;
            d["holds"] = r.holds;
            return d;
        },
        py::arg("g"));
    m.def("seagull_condition", py::overload_cast<const Graph&>(&seagull_condition));
    m.def("remark6_check", py::overload_cast<const Graph&>(&remark6_check));

    m.def(
        "verify_json",
        [](const Graph& g, int minor_check_max_n, std::optional<double> minor_budget) {
            PipelineOptions opts;
            opts.minor_check_max_n = minor_check_max_n;
            if (minor_budget) opts.minor_budget = std::chrono::duration<double>(*minor_budget);
            py::gil_scoped_release nogil;
            return to_json(verify_pipeline(g, opts)).dump();
        },
        py::arg("g"), py::arg("minor_check_max_n") = 14, py::arg("minor_budget") = py::none(),
        "run the full pipeline; returns the certificate as JSON text");
    m.def(
        "revalidate_json",
        [](const std::string& text) {
            auto r = revalidate(certificate_from_json(Json::parse(text)));
            return r.failures;
        },
        py::arg("certificate"), "re-check a certificate; returns the list of failures (empty when valid)");

    m.def("enumerate_alpha2", &enumerate_alpha2, py::arg("n"), py::call_guard<py::gil_scoped_release>());
    m.def("enumerate_triangle_free", &enumerate_triangle_free, py::arg("n"), py::call_guard<py::gil_scoped_release>());
    m.def("random_alpha2", &random_alpha2, py::arg("n"), py::arg("seed"));
    m.def("sample_seed", &sample_seed, py::arg("seed"), py::arg("i"));
}
