#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sck/algorithms.hpp"
#include "sck/cycles.hpp"
#include "sck/decompose.hpp"
#include "sck/graph.hpp"
#include "sck/ordering.hpp"
#include "sck/separators.hpp"

namespace py = pybind11;
using namespace sck;

namespace {

std::optional<int> opt_length(int v) {
    if (v == kNoCycle) return std::nullopt;
    return v;
}

std::vector<std::vector<int>> cycles_as_lists(const std::vector<InducedCycle>& cs) {
    std::vector<std::vector<int>> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.vertices);
    return out;
}

py::dict component_dict(const Component& c) {
    py::dict d;
    d["kind"] = std::string(to_string(c.kind));
    if (c.kind == ComponentKind::Cage) d["n"] = c.cage_size;
    d["vertices"] = c.vertices;
    d["edges"] = c.edges;
    return d;
}

GeneratorOptions make_options(int k, int steps, std::uint64_t seed,
                              const std::vector<std::string>& rules, const std::string& base) {
    GeneratorOptions opt;
    opt.k = k;
    opt.steps = steps;
    opt.seed = seed;
    for (const auto& r : rules) {
        if (r == "iii") {
            opt.rule_weights.emplace_back(Rule::AttachVertex, 1.0);
        } else if (r == "iv") {
            opt.rule_weights.emplace_back(Rule::AttachCycleVertex, 1.0);
        } else if (r == "v") {
            opt.rule_weights.emplace_back(Rule::AttachCycleEdge, 1.0);
        } else if (r == "vi") {
            opt.rule_weights.emplace_back(Rule::AttachCyclePath, 1.0);
        } else {
            throw std::invalid_argument("unknown rule '" + r + "' (expected iii|iv|v|vi)");
        }
    }
    if (base == "k1") {
        opt.base = GeneratorOptions::Base::K1;
    } else if (base == "ck") {
        opt.base = GeneratorOptions::Base::Ck;
    } else if (base == "auto") {
        opt.base = GeneratorOptions::Base::BySeed;
    } else {
        throw std::invalid_argument("unknown base '" + base + "' (expected auto|k1|ck)");
    }
    return opt;
}

}  // namespace

PYBIND11_MODULE(sck, m) {
    m.doc() = "Strictly chordality-k graph algorithms: recognition, generation, "
              "orderings, hamiltonicity, coloring, fill-in and tree decompositions";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) {
                 return build_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<sck.Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("read_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("write_edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    });

    m.def("min_degree", &min_degree);
    m.def("cut_vertices", &cut_vertices);
    m.def("cut_edges", &cut_edges);
    m.def("girth", [](const Graph& g) { return opt_length(girth(g)); });
    m.def("chordality", [](const Graph& g) { return opt_length(chordality(g)); });

    m.def("enumerate_induced_cycles",
          [](const Graph& g, std::optional<int> max_len) {
              return cycles_as_lists(enumerate_induced_cycles(g, max_len));
          },
          py::arg("g"), py::arg("max_len") = std::nullopt);

    m.def("is_sck", &is_sck_oracle, py::arg("g"), py::arg("k"),
          "Definition-level membership test (oracle).");
    m.def("infer_k", [](const Graph& g) { return infer_k(g).k; });

    m.def("recognize",
          [](const Graph& g, int k) {
              RecognitionResult r = recognize_sck(g, k);
              std::vector<py::dict> comps;
              for (const auto& c : r.decomposition.components) comps.push_back(component_dict(c));
              return py::make_tuple(r.is_sck, comps);
          },
          py::arg("g"), py::arg("k"),
          "Decomposition-based recognizer; returns (is_sck, components).");

    m.def("decompose", [](const Graph& g, int k) {
        RecognitionResult r = recognize_sck(g, k);
        std::vector<py::dict> comps;
        for (const auto& c : r.decomposition.components) comps.push_back(component_dict(c));
        return comps;
    });

    m.def("generate",
          [](int k, int steps, std::uint64_t seed, const std::vector<std::string>& rules,
             const std::string& base) {
              return generate_sck(make_options(k, steps, seed, rules, base));
          },
          py::arg("k"), py::arg("steps"), py::arg("seed") = 0,
          py::arg("rules") = std::vector<std::string>{}, py::arg("base") = "auto");

    m.def("extract_vco", [](const Graph& g, int k) {
        Vco vco = extract_vco(g, k);
        std::vector<py::dict> labels;
        for (const auto& l : vco.labels) {
            py::dict d;
            if (l.kind == VcoLabel::Kind::PendantVertex) {
                d["kind"] = "pendant_vertex";
                d["v"] = l.vertex;
                d["attach"] = l.attach_vertex;
            } else {
                d["kind"] = "pendant_cycle";
                d["s"] = l.s;
                d["cycle"] = l.cycle;
                d["attach"] = l.attach;
            }
            labels.push_back(std::move(d));
        }
        py::dict base;
        base["vertices"] = vco.base_vertices;
        base["edges"] = vco.base_edges;
        return py::make_tuple(labels, base);
    });

    m.def("minimal_separators", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_minimal_separators(g)) out.push_back(s.vertices);
        return out;
    });

    m.def("find_cages", [](const Graph& g, int k) {
        std::vector<py::dict> out;
        for (const auto& c : find_cages(g, k)) {
            py::dict d;
            d["hubs"] = c.hubs;
            d["n"] = c.size;
            d["paths"] = c.paths;
            out.push_back(std::move(d));
        }
        return out;
    });

    m.def("hamiltonian",
          [](const Graph& g, int k) { return is_hamiltonian_sck(g, k).cycle; },
          py::arg("g"), py::arg("k"),
          "Spanning cycle when the SC_k graph is hamiltonian, else None.");
    m.def("hamiltonian_bruteforce",
          [](const Graph& g, int bound) { return hamiltonian_bruteforce(g, bound).cycle; },
          py::arg("g"), py::arg("bound") = 16);

    m.def("color", &color_sck, py::arg("g"), py::arg("k"));
    m.def("is_chordal", &is_chordal);

    m.def("fill_in", [](const Graph& g, int k) {
        FillInResult r = fill_in(g, k);
        return py::make_tuple(r.added_edges, r.chordal_graph);
    });

    m.def("tree_decomposition",
          [](const Graph& g, int k, const std::vector<int>& fan_hubs) {
              TreeDecomposition td;
              if (girth(g) == kNoCycle) {
                  td = trivial_tree_decomposition(g);
              } else if (k % 2 == 1) {
                  td = tree_decomposition_odd(g, k, fan_hubs);
              } else {
                  td = tree_decomposition_even(g, k, fan_hubs);
              }
              return py::make_tuple(td.bags, td.tree_edges, td.width);
          },
          py::arg("g"), py::arg("k"), py::arg("fan_hubs") = std::vector<int>{},
          "Width-2 tree decomposition as (bags, tree_edges, width).");

    m.def("validate_tree_decomposition",
          [](const Graph& g, const std::vector<std::vector<int>>& bags,
             const std::vector<std::pair<int, int>>& edges) {
              TreeDecomposition td;
              td.bags = bags;
              for (auto& b : td.bags) std::sort(b.begin(), b.end());
              td.tree_edges = edges;
              size_t mx = 0;
              for (const auto& b : td.bags) mx = std::max(mx, b.size());
              td.width = static_cast<int>(mx) - 1;
              TdValidation v = validate_tree_decomposition(g, td);
              return py::make_tuple(v.valid, v.violation);
          });

    m.def("treewidth_bruteforce", &treewidth_bruteforce, py::arg("g"), py::arg("bound") = 12);
}
