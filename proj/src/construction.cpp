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

#include "construction.hpp"

#include <algorithm>
#include <deque>

namespace cayley {

std::vector<Edge> connecting_tree(const Graph& g, std::span<const Vertex> terminals,
                                  std::span<const std::uint8_t> excluded) {
  std::vector<Edge> tree;
  if (terminals.empty()) return tree;
  auto blocked = [&](Vertex v) { return !excluded.empty() && excluded[v]; };
  for (Vertex t : terminals) {
    if (blocked(t)) {
      throw ConstructionError("connecting tree: terminal " + g.label(t) +
                              " lies outside the region");
    }
  }
  std::vector<char> in_tree(g.order(), 0);
  in_tree[terminals[0]] = 1;
  std::vector<Vertex> parent(g.order());
  std::deque<Vertex> queue;
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    const Vertex target = terminals[i];
    if (in_tree[target]) continue;
    // Multi-source BFS from the current tree.
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in_tree[v]) {
        parent[v] = v;
        queue.push_back(v);
      }
    }
    while (!queue.empty() && parent[target] < 0) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (parent[w] >= 0 || blocked(w)) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    if (parent[target] < 0) {
      throw ConstructionError("connecting tree: " + g.label(target) +
                              " unreachable inside the region");
    }
    for (Vertex v = target; !in_tree[v]; v = parent[v]) {
      in_tree[v] = 1;
      tree.emplace_back(v, parent[v]);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace detail {

void append_path(std::vector<Edge>& tree, std::span<const Vertex> path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    tree.emplace_back(path[i - 1], path[i]);
  }
}

void finish_tree(std::vector<Edge>& tree, const std::string& trace) {
  std::sort(tree.begin(), tree.end());
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end()) {
    throw ConstructionError(trace + ": tree repeats an edge");
  }
}

Triple sorted_triple(Triple s) {
  std::sort(s.begin(), s.end());
  return s;
}

PathSystem expect_paths(const PathResult& result, const std::string& trace) {
  if (!result.ok()) {
    throw ConstructionError(trace + ": " + result.failure().describe());
  }
  return result.value();
}

std::vector<std::vector<Edge>> pair_and_fan(
    const Graph& g, Vertex x, Vertex y, Vertex z, int k,
    std::span<const std::uint8_t> outside_a, std::span<const std::uint8_t> outside_b,
    const std::function<Vertex(Vertex)>& cross, std::vector<std::string>& notes,
    const std::string& trace) {
  const PathSystem& pair =
      expect_paths(internally_disjoint_paths(g, x, y, k, outside_a),
                   trace + " (x,y)-paths");

  std::vector<Vertex> landing(k);
  for (int i = 0; i < k; ++i) landing[i] = cross(pair.paths[i][1]);

  std::vector<std::vector<Vertex>> fan_paths(k);
  std::vector<Vertex> fan_targets;
  for (int i = 0; i < k; ++i) {
    if (landing[i] == z) {
      fan_paths[i] = {z};
      notes.push_back("degenerate fan path: z is the cross neighbour of " +
                      g.label(pair.paths[i][1]));
    } else {
      fan_targets.push_back(landing[i]);
    }
  }
  if (!fan_targets.empty()) {
    const PathSystem& spread = expect_paths(
        fan(g, z, fan_targets, static_cast<int>(fan_targets.size()), outside_b),
        trace + " fan from z");
    for (const auto& path : spread.paths) {
      const auto it = std::find(landing.begin(), landing.end(), path.back());
      fan_paths[it - landing.begin()] = path;
    }
  }

  std::vector<std::vector<Edge>> trees(k);
  for (int i = 0; i < k; ++i) {
    append_path(trees[i], pair.paths[i]);
    append_path(trees[i], fan_paths[i]);
    trees[i].emplace_back(pair.paths[i][1], landing[i]);
    finish_tree(trees[i], trace);
  }
  return trees;
}

}  // namespace detail
}  // namespace cayley
