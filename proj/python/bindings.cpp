#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "d2c/decide.hpp"
#include "d2c/graph.hpp"
#include "d2c/iso.hpp"
#include "d2c/oracle.hpp"
#include "d2c/reductions.hpp"

namespace py = pybind11;

namespace {

py::dict verdict_to_dict(const d2c::Graph& g, const d2c::D2CVerdict& verdict) {
    py::dict out;
    if (verdict.is_yes()) {
        out["verdict"] = "YES";
        out["witness"] = verdict.witness->colors;
        return out;
    }
    out["verdict"] = "NO";
    py::dict reason;
    const d2c::NoReason& r = *verdict.reason;
    if (const auto* nb = std::get_if<d2c::NonBipartite>(&r)) {
        reason["kind"] = "NonBipartite";
        reason["cycle"] = nb->certificate.cycle;
    } else if (const auto* cd = std::get_if<d2c::ComponentNotDistinguishable>(&r)) {
        reason["kind"] = "ComponentNotDistinguishable";
        reason["component"] = cd->component_index;
        reason["nta"] = cd->nta.p;
    } else if (const auto* tri = std::get_if<d2c::ThreeIsomorphicComponents>(&r)) {
        reason["kind"] = "ThreeIsomorphicComponents";
        reason["components"] = tri->component_indices;
        reason["isomorphisms"] =
            py::make_tuple(tri->isomorphisms[0].p, tri->isomorphisms[1].p);
    } else if (const auto* pair = std::get_if<d2c::IsomorphicPairNotAsymmetric>(&r)) {
        reason["kind"] = "IsomorphicPairNotAsymmetric";
        reason["components"] = pair->component_indices;
        reason["iso"] = pair->iso.p;
        reason["nta"] = pair->nta.p;
    }
    out["reason"] = reason;
    (void)g;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "proper distinguishing 2-colorability: decision, certificates, reductions";

    py::register_exception<d2c::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<d2c::ThresholdError>(m, "ThresholdError", PyExc_RuntimeError);

    py::class_<d2c::Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &d2c::Graph::n)
        .def_property_readonly("m", &d2c::Graph::m)
        .def("has_edge", &d2c::Graph::has_edge)
        .def("degree", &d2c::Graph::degree)
        .def("neighbors", &d2c::Graph::neighbors)
        .def("edges", &d2c::Graph::edges)
        .def("__eq__", [](const d2c::Graph& a, const d2c::Graph& b) { return a == b; })
        .def("__repr__", [](const d2c::Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph6", &d2c::parse_graph6, py::arg("record"));
    m.def("write_graph6", &d2c::write_graph6, py::arg("graph"));
    m.def("parse_edge_list", &d2c::parse_edge_list, py::arg("text"));

    m.def(
        "decide",
        [](const d2c::Graph& g) { return verdict_to_dict(g, d2c::decide_d2c(g)); },
        py::arg("graph"));

    m.def(
        "brute_chi_d_le_2",
        [](const d2c::Graph& g, int threshold) {
            return d2c::oracle::brute_chi_d_le_2(g, threshold);
        },
        py::arg("graph"), py::arg("threshold") = d2c::oracle::kDefaultThreshold);

    m.def(
        "verify_distinguishing",
        [](const d2c::Graph& g, const std::vector<int>& colors) {
            return d2c::verify_distinguishing(g, d2c::TwoColoring(colors));
        },
        py::arg("graph"), py::arg("colors"));

    m.def(
        "has_nta",
        [](const d2c::Graph& g) -> std::optional<std::vector<int>> {
            auto p = d2c::has_nta(g);
            if (!p) return std::nullopt;
            return p->p;
        },
        py::arg("graph"));

    m.def(
        "are_isomorphic",
        [](const d2c::Graph& a, const d2c::Graph& b) -> std::optional<std::vector<int>> {
            auto p = d2c::are_isomorphic(a, b);
            if (!p) return std::nullopt;
            return p->p;
        },
        py::arg("first"), py::arg("second"));

    m.def(
        "canonical_key", [](const d2c::Graph& g) { return d2c::canonical_form(g).key; },
        py::arg("graph"));

    m.def(
        "bipartition",
        [](const d2c::Graph& g) {
            py::dict out;
            auto bp = d2c::bipartition(g);
            if (const auto* colors = std::get_if<d2c::TwoColoring>(&bp)) {
                out["bipartite"] = true;
                out["colors"] = colors->colors;
            } else {
                out["bipartite"] = false;
                out["odd_cycle"] = std::get<d2c::OddCycleCertificate>(bp).cycle;
            }
            return out;
        },
        py::arg("graph"));

    m.def(
        "ga_to_cc",
        [](const d2c::Graph& g) {
            auto res = d2c::ga_to_cc(g);
            py::dict out;
            out["graph"] = res.graph;
            out["case"] = res.tag == d2c::GaToCcCase::Subdivided ? "subdivided" : "k1-no-instance";
            out["complemented"] = res.complemented;
            if (res.map) {
                out["source_n"] = res.map->source_n;
                out["source_edges"] = res.map->source_edges;
            }
            return out;
        },
        py::arg("graph"));

    m.def(
        "cc_to_ga",
        [](const d2c::Graph& g) {
            auto res = d2c::cc_to_ga(g);
            py::dict out;
            out["graph"] = res.graph;
            switch (res.tag) {
                case d2c::CcToGaCase::K1OrK2: out["case"] = "k1-or-k2"; break;
                case d2c::CcToGaCase::NonBipartite: out["case"] = "non-bipartite"; break;
                case d2c::CcToGaCase::Unbalanced: out["case"] = "unbalanced"; break;
                case d2c::CcToGaCase::Balanced: out["case"] = "balanced"; break;
            }
            if (res.map) {
                out["a"] = res.map->a;
                out["b"] = res.map->b;
                out["c"] = res.map->c;
                out["x_class"] = res.map->x_class;
            }
            return out;
        },
        py::arg("graph"));
}
