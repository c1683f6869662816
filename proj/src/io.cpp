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

#include "cayley_steiner/io.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

namespace cayley {

namespace {

using nlohmann::ordered_json;

constexpr std::array<const char*, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

}  // namespace

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["order"] = g.order();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["labels"] = g.labels();
  return j.dump() + "\n";
}

std::string graph_to_dot(const Graph& g, std::span<const int> groups) {
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (!groups.empty()) {
      out << ", fillcolor=\"" << kPalette[groups[v] % kPalette.size()] << "\"";
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string stree_set_to_json(const std::string& family, int n, const Graph& g,
                              const STreeSet& set) {
  ordered_json j;
  j["family"] = family;
  j["n"] = n;
  ordered_json terminals = ordered_json::array();
  for (Vertex v : set.terminals) terminals.push_back(g.label(v));
  j["S"] = std::move(terminals);
  j["case"] = set.case_label;
  ordered_json trees = ordered_json::array();
  for (const auto& tree : set.trees) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : tree) edges.push_back({g.label(e.u), g.label(e.v)});
    trees.push_back(std::move(edges));
  }
  j["trees"] = std::move(trees);
  j["notes"] = set.notes;
  return j.dump(2) + "\n";
}

}  // namespace cayley
