#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "eh/algorithms.hpp"
#include "eh/caterpillar.hpp"
#include "eh/certificate.hpp"
#include "eh/generators.hpp"
#include "eh/oracle.hpp"
#include "eh/pipeline.hpp"

namespace py = pybind11;
using namespace eh;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

std::optional<std::map<int, int>> embedding_dict(const std::optional<Embedding>& e) {
    if (!e) return std::nullopt;
    std::map<int, int> m;
    for (std::size_t i = 0; i < e->map.size(); ++i) m[static_cast<int>(i)] = e->map[i];
    return m;
}

py::tuple shape_tuple(const CaterpillarShape& s) { return py::make_tuple(s.h, s.d, s.t); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "certificate engine for the caterpillar dichotomy";

    py::register_exception<DiagnosticError>(m, "DiagnosticFailure", PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.size()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("complement", &complement);

    m.def(
        "make_caterpillar",
        [](int h, int d, int t) { return make_caterpillar({h, d, t}).graph; },
        py::arg("h"), py::arg("d"), py::arg("t"),
        "The canonical template caterpillar T_{h,d,t} as a Graph");

    m.def("is_caterpillar", [](const Graph& g) -> std::optional<py::tuple> {
        auto r = is_caterpillar(g);
        if (!r) return std::nullopt;
        return shape_tuple(r->shape);
    });

    m.def("shape_for", [](const Graph& g) { return shape_tuple(shape_for(g)); });

    m.def(
        "find_induced",
        [](const Graph& host, const Graph& pattern) {
            return embedding_dict(find_induced(host, pattern));
        },
        py::arg("host"), py::arg("pattern"),
        "Induced embedding pattern->host as a dict, or None");

    m.def("find_induced_naive", [](const Graph& host, const Graph& pattern) {
        return embedding_dict(find_induced_naive(host, pattern));
    });

    m.def("max_anti_pair_bruteforce",
          [](const Graph& g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
              auto r = max_anti_pair_bruteforce(g);
              if (!r) return std::nullopt;
              return std::make_pair(r->first.to_vector(), r->second.to_vector());
          });

    m.def(
        "verify_certificate",
        [](const Graph& g, const std::string& cert_json) {
            auto cert = certificate_from_json(nlohmann::json::parse(cert_json));
            auto r = verify_certificate(g, cert);
            return py::make_tuple(r.ok, r.reason);
        },
        py::arg("graph"), py::arg("certificate_json"),
        "Returns (ok, first_failure_reason)");

    m.def(
        "constants",
        [](int h, int d, int t) { return schedule_to_json(constants({h, d, t})).dump(); },
        py::arg("h"), py::arg("d"), py::arg("t"),
        "Exact-rational constant schedule as a JSON string");

    m.def(
        "dichotomy",
        [](const Graph& g, const Graph& pattern, std::uint64_t seed,
           std::optional<long long> ell, std::optional<std::string> eps, std::uint64_t budget) {
            DichotomyOptions opt;
            opt.seed = seed;
            opt.budget = budget;
            if (ell) opt.ell_override = *ell;
            if (eps) opt.eps_override = parse_fraction(*eps);
            auto outcome = dichotomy(g, pattern, opt);
            return py::make_tuple(certificate_to_json(outcome.certificate).dump(),
                                  outcome.report.dump());
        },
        py::arg("graph"), py::arg("pattern"), py::arg("seed") = 0,
        py::arg("ell") = std::nullopt, py::arg("eps") = std::nullopt,
        py::arg("budget") = 200000,
        "Runs the pipeline; returns (certificate_json, report_json)");

    m.def("gen_gnp", [](int n, const std::string& p, std::uint64_t seed) {
        return gen_gnp(n, parse_fraction(p), seed);
    });
    m.def("gen_bounded_degree", &gen_bounded_degree);
    m.def("gen_two_cliques", [](int n, std::uint64_t seed) {
        auto inst = gen_two_cliques(n, seed);
        return py::make_tuple(inst.graph, certificate_to_json(inst.sidecar).dump());
    });
    m.def("gen_planted_caterpillar", [](int h, int d, int t, int n, std::uint64_t seed) {
        auto inst = gen_planted_caterpillar({h, d, t}, n, seed);
        return py::make_tuple(inst.graph, certificate_to_json(inst.sidecar).dump());
    });
    m.def("gen_planted_bipartite_hole", [](int n, const std::string& frac, std::uint64_t seed) {
        auto inst = gen_planted_bipartite_hole(n, parse_fraction(frac), seed);
        return py::make_tuple(inst.graph, certificate_to_json(inst.sidecar).dump());
    });
}
