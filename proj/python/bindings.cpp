// Copyright 2026 The cayley-steiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley_steiner/flows.hpp"
#include "cayley_steiner/io.hpp"
#include "cayley_steiner/topology.hpp"
#include "cayley_steiner/trees.hpp"
#include "cayley_steiner/verify.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict tree_set_dict(const Graph& g, const STreeSet& set) {
  py::dict d;
  d["terminals"] = std::vector<int>(set.terminals.begin(), set.terminals.end());
  d["case"] = set.case_label;
  py::list trees;
  for (const auto& tree : set.trees) trees.append(edge_pairs(tree));
  d["trees"] = trees;
  d["notes"] = set.notes;
  const CheckResult verdict = check(g, set);
  d["valid"] = verdict.ok;
  d["reason"] = verdict.reason;
  return d;
}

Triple triple_of(const std::vector<int>& s) {
  if (s.size() != 3) throw py::value_error("expected exactly three vertices");
  return {s[0], s[1], s[2]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Burnt pancake and godan graphs with internally edge-disjoint S-trees";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (!g.contains(v)) throw py::index_error("vertex out of range");
             auto span = g.neighbors(v);
             return std::vector<Vertex>(span.begin(), span.end());
           })
      .def("degree", &Graph::degree)
      .def("label", [](const Graph& g, Vertex v) {
             if (!g.contains(v)) throw py::index_error("vertex out of range");
             return g.label(v);
           })
      .def("find_label", [](const Graph& g, const std::string& label) {
             const auto v = g.find_label(label);
             return v ? py::object(py::int_(*v)) : py::object(py::none());
           })
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def_property_readonly("labels", [](const Graph& g) {
             return std::vector<std::string>(g.labels().begin(), g.labels().end());
           })
      .def("is_regular", &Graph::is_regular)
      .def("to_json", &graph_to_json)
      .def("to_dot", [](const Graph& g) { return graph_to_dot(g); });

  m.def("burnt_pancake", &build_burnt_pancake, py::arg("n"));
  m.def("alternating_network", &build_alternating_network, py::arg("n"));
  m.def("godan", &build_godan, py::arg("n"));
  m.def("vertex_connectivity", &vertex_connectivity, py::arg("graph"));
  m.def("upper_bound_lemma1", &upper_bound_lemma1, py::arg("graph"));
  m.def("lower_bound_lemma2", &lower_bound_lemma2, py::arg("kappa"));

  py::class_<BurntPancakeNetwork>(m, "BurntPancakeNetwork")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &BurntPancakeNetwork::n)
      .def_property_readonly("graph", &BurntPancakeNetwork::graph,
                             py::return_value_policy::reference_internal)
      .def("cluster_of", [](const BurntPancakeNetwork& bp, Vertex v) {
             return bp.cluster_of(v).value;
           })
      .def("out_neighbour", &BurntPancakeNetwork::out_neighbour)
      .def("trees", [](const BurntPancakeNetwork& bp, const std::vector<int>& s) {
             return tree_set_dict(bp.graph(), bp_trees(bp, triple_of(s)));
           }, py::arg("terminals"));

  py::class_<GodanNetwork>(m, "GodanNetwork")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &GodanNetwork::n)
      .def_property_readonly("graph", &GodanNetwork::graph,
                             py::return_value_policy::reference_internal)
      .def("part_of", &GodanNetwork::part_of)
      .def("out_neighbour", &GodanNetwork::out_neighbour)
      .def("trees", [](const GodanNetwork& ea, const std::vector<int>& s,
                       int budget_ms) {
             PackingOptions options;
             options.budget = std::chrono::milliseconds(budget_ms);
             return tree_set_dict(ea.graph(), ea_trees(ea, triple_of(s), options));
           }, py::arg("terminals"), py::arg("budget_ms") = 0);

  m.def("stree_packing",
        [](const Graph& g, const std::vector<int>& s, int k, int budget_ms) {
          PackingOptions options;
          options.budget = std::chrono::milliseconds(budget_ms);
          PackingResult result;
          {
            py::gil_scoped_release release;
            result = generic_stree_packing(g, triple_of(s), k, options);
          }
          static const char* names[] = {"found", "infeasible", "indeterminate"};
          py::dict d;
          d["status"] = names[static_cast<int>(result.status)];
          py::list trees;
          for (const auto& tree : result.trees.trees) trees.append(edge_pairs(tree));
          d["trees"] = trees;
          d["nodes"] = result.nodes;
          return d;
        },
        py::arg("graph"), py::arg("terminals"), py::arg("k"), py::arg("budget_ms") = 0);

  m.def("certify_json",
        [](const std::string& family, int n, std::uint64_t sample, std::uint64_t seed,
           int workers) {
          const auto f = parse_family(family);
          if (!f) throw py::value_error("family must be 'BP' or 'EA'");
          CertifyOptions options;
          options.sample = sample;
          options.seed = seed;
          options.workers = workers;
          py::gil_scoped_release release;
          return certify_family(*f, n, options).to_json();
        },
        py::arg("family"), py::arg("n"), py::arg("sample") = 0, py::arg("seed") = 0,
        py::arg("workers") = 1);

  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
}
