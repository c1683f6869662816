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

// Internally edge-disjoint S-tree constructions for godan graphs EA_n.

#include "construction.hpp"

namespace cayley {

namespace {

using detail::finish_tree;
using detail::sorted_triple;

std::string trace_of(const GodanNetwork& ea, const Triple& s, const char* label) {
  const Graph& g = ea.graph();
  return "EA_" + std::to_string(ea.n()) + " {" + g.label(s[0]) + "; " +
         g.label(s[1]) + "; " + g.label(s[2]) + "} [" + label + "]";
}

void require_valid(const GodanNetwork& ea, const Triple& s) {
  for (Vertex v : s) {
    if (!ea.graph().contains(v)) throw std::domain_error("vertex out of range");
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw std::domain_error("S must consist of three distinct vertices");
  }
}

const char* packing_status_name(PackingStatus status) {
  switch (status) {
    case PackingStatus::found:
      return "found";
    case PackingStatus::infeasible:
      return "infeasible";
    case PackingStatus::indeterminate:
      return "indeterminate (budget exhausted)";
  }
  return "?";
}

// All of S in one part: n - 2 trees inside the part from the packing search,
// one tree through the other part entered by the three matching edges.
std::vector<std::vector<Edge>> one_part(const GodanNetwork& ea, const Triple& s,
                                        int part, const PackingOptions& options,
                                        const std::string& trace) {
  const Graph& g = ea.graph();
  const Subgraph& sub = ea.part_graph(part);
  Triple local{};
  for (int t = 0; t < 3; ++t) local[t] = sub.from_host[s[t]];
  const PackingResult packed =
      generic_stree_packing(sub.graph, local, ea.n() - 2, options);
  if (packed.status != PackingStatus::found) {
    throw ConstructionError(trace + ": packing inside AN_n " +
                            packing_status_name(packed.status));
  }

  std::vector<std::vector<Edge>> trees;
  for (const auto& local_tree : packed.trees.trees) {
    std::vector<Edge> tree;
    for (const Edge& e : local_tree) tree.emplace_back(sub.to_host[e.u], sub.to_host[e.v]);
    finish_tree(tree, trace);
    trees.push_back(std::move(tree));
  }
  std::array<Vertex, 3> exits{};
  for (int t = 0; t < 3; ++t) exits[t] = ea.out_neighbour(s[t]);
  std::vector<Edge> outer = connecting_tree(g, exits, ea.outside_of(3 - part));
  for (int t = 0; t < 3; ++t) outer.emplace_back(s[t], exits[t]);
  finish_tree(outer, trace);
  trees.push_back(std::move(outer));
  return trees;
}

}  // namespace

std::vector<std::string> ea_case_labels(int) {
  return {case_label::kEvenTriple, case_label::kEvenPair, case_label::kOddPair,
          case_label::kOddTriple};
}

std::string classify_ea(const GodanNetwork& ea, Triple s) {
  require_valid(ea, s);
  int even = 0;
  for (Vertex v : s) even += ea.part_of(v) == 1;
  switch (even) {
    case 3:
      return case_label::kEvenTriple;
    case 2:
      return case_label::kEvenPair;
    case 1:
      return case_label::kOddPair;
    default:
      return case_label::kOddTriple;
  }
}

STreeSet ea_trees(const GodanNetwork& ea, Triple s, const PackingOptions& options) {
  require_valid(ea, s);
  s = sorted_triple(s);
  const std::string label = classify_ea(ea, s);
  const std::string trace = trace_of(ea, s, label.c_str());
  std::vector<std::string> notes;
  std::vector<std::vector<Edge>> trees;

  if (label == case_label::kEvenTriple || label == case_label::kOddTriple) {
    trees = one_part(ea, s, ea.part_of(s[0]), options, trace);
  } else {
    // x, y: the pair sharing a part, z: the odd one out.
    const int pair_part = label == case_label::kEvenPair ? 1 : 2;
    std::vector<Vertex> pair;
    Vertex z = -1;
    for (Vertex v : s) {
      if (ea.part_of(v) == pair_part) {
        pair.push_back(v);
      } else {
        z = v;
      }
    }
    trees = detail::pair_and_fan(
        ea.graph(), pair[0], pair[1], z, ea.n() - 1, ea.outside_of(pair_part),
        ea.outside_of(3 - pair_part), [&](Vertex v) { return ea.out_neighbour(v); },
        notes, trace);
  }
  if (static_cast<int>(trees.size()) != ea.n() - 1) {
    throw ConstructionError(trace + ": built " + std::to_string(trees.size()) +
                            " trees");
  }
  STreeSet out;
  out.terminals = s;
  out.trees = std::move(trees);
  out.case_label = label;
  out.notes = std::move(notes);
  return out;
}

}  // namespace cayley
