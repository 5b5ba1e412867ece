#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dompoly/canonical.hpp"
#include "dompoly/constructions.hpp"
#include "dompoly/extremal.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/search.hpp"
#include "dompoly/serialize.hpp"
#include "dompoly/theorems.hpp"

namespace py = pybind11;
using namespace dompoly;

namespace {

py::list to_pylist(const Polynomial& p) {
    py::list out;
    auto as_int = py::module_::import("builtins").attr("int");
    for (const auto& c : p.coeffs()) out.append(as_int(c.str()));
    return out;
}

Polynomial from_pylist(const py::sequence& coeffs) {
    std::vector<BigInt> values;
    for (auto c : coeffs) values.emplace_back(py::str(c).cast<std::string>());
    const int n = static_cast<int>(values.size()) - 1;
    return Polynomial::from_coefficients(n, std::move(values));
}

VertexSet to_set(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw Error("vertex index out of range");
        s = s.with(v);
    }
    return s;
}

std::string verify_json(const std::string& claim, const std::vector<int>& params) {
    if (claim == "fact1" && params.size() == 2) return to_json(verify_fact1(params[0], params[1])).dump();
    if (claim == "thm2" && params.size() == 1) return to_json(verify_theorem2_members(params[0])).dump();
    if (claim == "thm4" && params.size() == 2) return to_json(verify_theorem4_members(params[0], params[1])).dump();
    if (claim == "counterexample") return to_json(verify_counterexample(PartitionSpec(params))).dump();
    if (claim == "thm3") {
        PartitionSpec spec(params);
        const auto corpus = exhaustive_corpus(spec.order());
        return to_json(verify_theorem3(spec, corpus)).dump();
    }
    throw Error("unknown claim or wrong parameter count: " + claim);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact domination polynomials, graph joins and D-equivalence checks.";

    // Later registrations are tried first, so subclasses come after Error.
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_static("from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
        })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("construct", [](const std::string& expr) { return parse_construction(expr); }, py::arg("expr"));
    m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(PartitionSpec(parts)); });
    m.def("equipartite", &equipartite, py::arg("r"), py::arg("a"));
    m.def("h_graph", &h_graph, py::arg("a"), py::arg("t"));
    m.def("j_graph", &j_graph, py::arg("r"), py::arg("a"), py::arg("t"));
    m.def("join", &join);
    m.def("complement", &complement);
    m.def("connected_components", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (auto c : connected_components(g)) out.push_back(c.to_vector());
        return out;
    });
    m.def("is_isomorphic", &is_isomorphic);
    m.def("canonical_graph6", &canonical_key);
    m.def("chromatic_number", &chromatic_number);

    m.def("is_dominating", [](const Graph& g, const std::vector<int>& s) { return is_dominating(g, to_set(s)); });
    m.def("polynomial", [](const Graph& g) { return to_pylist(polynomial(g)); },
          "Coefficients d(G,0..n) via join decomposition.");
    m.def("polynomial_bruteforce", [](const Graph& g) { return to_pylist(polynomial_bruteforce(g)); });
    m.def("polynomial_string", [](const Graph& g) { return polynomial(g).to_string(); });
    m.def("multipartite_closed_form", [](const std::vector<int>& parts) {
        return to_pylist(multipartite_closed_form(PartitionSpec(parts)));
    });
    m.def("nondominating_sets", [](const Graph& g, int k) {
        std::vector<std::vector<int>> out;
        const SetFamily f = nondominating_sets(g, k);
        for (auto s : f.sets()) out.push_back(s.to_vector());
        return out;
    });
    m.def("min_degree_from_polynomial", [](const py::sequence& coeffs) {
        auto r = min_degree_from_polynomial(from_pylist(coeffs));
        return std::pair{r.ell, r.delta};
    });

    m.def("generalized_binomial", &generalized_binomial);
    m.def("solve_x", &solve_x);
    m.def("turan_max_edges", &turan_max_edges);
    m.def("is_clique_free", &is_clique_free);
    m.def("dominating_pair_graph", &dominating_pair_graph);
    m.def("_check_kk_json", [](const std::vector<std::vector<int>>& sets) {
        std::vector<VertexSet> members;
        int ground = 0;
        for (const auto& s : sets) {
            members.push_back(to_set(s));
            for (int v : s) ground = std::max(ground, v + 1);
        }
        const int k = sets.empty() ? 0 : static_cast<int>(sets.front().size());
        return to_json(check_kk(SetFamily(ground, k, members))).dump();
    });

    m.def("uniqueness_condition", [](const std::vector<int>& parts) { return uniqueness_condition(PartitionSpec(parts)); });
    m.def("counterexample", [](const std::vector<int>& parts) { return counterexample(PartitionSpec(parts)); });
    m.def("_verify_json", &verify_json);

    m.def("enumerate_graphs", [](int n) { return enumerate_graphs(n); });
    m.def("exhaustive_corpus", [](int n) { return exhaustive_corpus(n); });
    m.def("_atlas_json", [](const std::vector<Graph>& corpus) { return to_json(build_atlas(corpus)).dump(); });
}
