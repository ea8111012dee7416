#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <vector>

#include "iasi/catalog.hpp"
#include "iasi/error.hpp"
#include "iasi/expr.hpp"
#include "iasi/graph.hpp"
#include "iasi/io.hpp"
#include "iasi/label.hpp"
#include "iasi/sparing.hpp"

namespace py = pybind11;
using namespace iasi;

namespace {

using PyLabeling = std::map<int, std::vector<std::int64_t>>;

Labeling labeling_in(const PyLabeling& d) {
    Labeling f;
    for (const auto& [v, xs] : d) f.emplace(v, LabelSet(xs));
    return f;
}

PyLabeling labeling_out(const Labeling& f) {
    PyLabeling d;
    for (const auto& [v, label] : f) d.emplace(v, label.elements());
    return d;
}

py::dict report_out(const VerificationReport& rep) {
    py::dict d;
    d["verdict"] = rep.verdict;
    py::list violations;
    for (const auto& v : rep.violations) violations.append(to_string(v.kind) + ": " + v.detail);
    d["violations"] = violations;
    return d;
}

py::dict certificate_out(const SparingCertificate& cert) {
    py::dict d;
    d["value"] = cert.value;
    d["expanded"] = cert.pattern.expanded;
    d["labeling"] = labeling_out(cert.labeling);
    d["mono_edges"] = cert.mono_edges;
    return d;
}

CheckParams params_in(const py::dict& kw) {
    CheckParams p;
    for (const auto& item : kw) {
        std::string key = py::cast<std::string>(item.first);
        if (key == "n") p.n = py::cast<int>(item.second);
        else if (key == "m") p.m = py::cast<int>(item.second);
        else if (key == "t") p.t = py::cast<int>(item.second);
        else if (key == "a") p.a = py::cast<int>(item.second);
        else if (key == "b") p.b = py::cast<int>(item.second);
        else if (key == "family") p.family = py::cast<std::string>(item.second);
        else if (key == "fam1") p.fam1 = py::cast<std::string>(item.second);
        else if (key == "fam2") p.fam2 = py::cast<std::string>(item.second);
        else if (key == "mode") p.mode = py::cast<std::string>(item.second);
        else if (key == "instance") p.instance = py::cast<std::string>(item.second);
        else throw py::value_error("unknown check parameter '" + key + "'");
    }
    return p;
}

Convention convention_in(const std::string& text) {
    if (text == "vertices") return Convention::Vertices;
    if (text == "length") return Convention::Length;
    throw py::value_error("convention must be 'vertices' or 'length'");
}

py::dict theorem_report_out(const TheoremReport& r) {
    py::dict d;
    d["theorem"] = to_string(r.id);
    d["params"] = r.params;
    d["convention"] = to_string(r.convention);
    d["paper_value"] = r.paper_value;
    d["oracle_value"] = r.oracle_value;
    d["verdict"] = to_string(r.verdict);
    d["witness"] = r.witness;
    d["remarks"] = r.remarks;
    return d;
}

} // namespace

PYBIND11_MODULE(iasi, m) {
    m.doc() = "weak integer additive set-indexers: sumset labelings, exact "
              "sparing numbers, and closed-form claim checks";

    py::register_exception<Error>(m, "Error");

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_static("path", &Graph::make_path, py::arg("k"))
        .def_static("cycle", &Graph::make_cycle, py::arg("k"))
        .def_static("complete", &Graph::make_complete, py::arg("k"))
        .def_static("complete_bipartite", &Graph::make_complete_bipartite,
                    py::arg("a"), py::arg("b"))
        .def("add_vertex", &Graph::add_vertex)
        .def("add_edge", &Graph::add_edge)
        .def("has_vertex", &Graph::has_vertex)
        .def("has_edge", &Graph::has_edge)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("relabeled_shifted", &Graph::relabeled_shifted)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(vertices=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("graph_union", &graph_union);
    m.def("graph_intersection", &graph_intersection);
    m.def("graph_join", &graph_join);
    m.def("ring_sum", &ring_sum);
    m.def("complement", &complement);
    m.def("subgraph_complement", &subgraph_complement);
    m.def("is_bipartite", [](const Graph& g) {
        auto res = is_bipartite(g);
        py::dict d;
        d["bipartite"] = res.bipartite;
        d["side_a"] = res.side_a;
        d["side_b"] = res.side_b;
        d["odd_cycle"] = res.odd_cycle;
        return d;
    });

    m.def("sumset", [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        return sumset(LabelSet(a), LabelSet(b)).elements();
    });
    m.def("induced_edge_labels", [](const Graph& g, const PyLabeling& f) {
        std::map<Edge, std::vector<std::int64_t>> out;
        for (const auto& [e, label] : induced_edge_labels(g, labeling_in(f)))
            out.emplace(e, label.elements());
        return out;
    });
    m.def("is_iasi",
          [](const Graph& g, const PyLabeling& f) { return report_out(is_iasi(g, labeling_in(f))); });
    m.def("is_weak_iasi", [](const Graph& g, const PyLabeling& f) {
        return report_out(is_weak_iasi(g, labeling_in(f)));
    });
    m.def("is_concurrent_weak", [](const Graph& g, const PyLabeling& f) {
        return report_out(is_concurrent_weak(g, labeling_in(f)));
    });
    m.def("mono_indexed_edges", [](const Graph& g, const PyLabeling& f) {
        return mono_indexed_edges(g, labeling_in(f));
    });
    m.def("restrict_to", [](const PyLabeling& f, const Graph& h) {
        return labeling_out(restrict_to(labeling_in(f), h));
    });

    m.def("pattern_feasible", [](const Graph& g, const std::vector<int>& expanded) {
        return pattern_feasible(g, Pattern{expanded});
    });
    m.def("pattern_mono_count", [](const Graph& g, const std::vector<int>& expanded) {
        return pattern_mono_count(g, Pattern{expanded});
    });
    m.def("realize_labeling", [](const Graph& g, const std::vector<int>& expanded) {
        return labeling_out(realize_labeling(g, Pattern{expanded}));
    });
    m.def("sparing_exact", [](const Graph& g) { return certificate_out(sparing_exact(g)); });
    m.def("sparing_oracle", &sparing_oracle);
    m.def("mono_count_spectrum", [](const Graph& g) {
        auto s = mono_count_spectrum(g);
        return std::vector<int>(s.begin(), s.end());
    });
    m.def("concurrent_min_mono", [](const Graph& g) {
        auto res = concurrent_min_mono(g);
        py::dict d;
        d["mono_in_graph"] = res.mono_in_graph;
        d["mono_in_complement"] = res.mono_in_complement;
        d["expanded"] = res.pattern.expanded;
        return d;
    });

    m.def("graph_from_expr", [](const std::string& text) { return graph_from_expr(text); });
    m.def("write_graph", &write_graph);
    m.def("read_graph", &read_graph);
    m.def("write_labeling", [](const PyLabeling& f) { return write_labeling(labeling_in(f)); });
    m.def("read_labeling", [](const std::string& text) { return labeling_out(read_labeling(text)); });

    m.def("theorems", [] {
        std::vector<std::string> names;
        for (TheoremId id : all_theorems()) names.push_back(to_string(id));
        return names;
    });
    m.def(
        "check",
        [](const std::string& theorem, const py::dict& params, const std::string& convention) {
            return theorem_report_out(
                check(theorem_from_string(theorem), params_in(params), convention_in(convention)));
        },
        py::arg("theorem"), py::arg("params"), py::arg("convention") = "vertices");
    m.def(
        "sweep_csv",
        [](const std::string& theorem, const std::vector<py::dict>& points,
           const std::string& convention) {
            std::vector<CheckParams> ps;
            for (const auto& d : points) ps.push_back(params_in(d));
            ConventionFlag flag = ConventionFlag::Vertices;
            if (convention == "length") flag = ConventionFlag::Length;
            else if (convention == "both") flag = ConventionFlag::Both;
            else if (convention != "vertices")
                throw py::value_error("convention must be vertices, length or both");
            return to_csv(sweep(theorem_from_string(theorem), ps, flag));
        },
        py::arg("theorem"), py::arg("points"), py::arg("convention") = "vertices");
}
