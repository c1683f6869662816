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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Vertex mask; a nonzero entry marks a vertex as unavailable.
using VertexMask = std::vector<std::uint8_t>;

/**
 * Immutable simple undirected graph on vertices 0..order-1 with sorted
 * adjacency lists and a text label per vertex.
 */
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument unless the lists describe a simple
  /// undirected graph. Lists are sorted on construction.
  Graph(std::vector<std::vector<Vertex>> adjacency,
        std::vector<std::string> labels);

  static Graph from_edges(int order, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  bool adjacent(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Vertex> find_label(std::string_view label) const;

  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }

  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  /// True when the vertices not excluded by mask induce a connected graph.
  bool is_connected(std::span<const std::uint8_t> excluded = {}) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// An induced subgraph together with the map back to host vertex indices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
  /// host vertex -> local vertex, -1 when absent.
  std::vector<Vertex> from_host;
};

/// Induced subgraph on the listed host vertices, in ascending host order.
Subgraph induced_subgraph(const Graph& host, std::span<const Vertex> keep);

/// Connected components as a component id per vertex (ids in order of
/// first appearance) restricted to vertices not excluded.
std::vector<int> connected_components(
    const Graph& g, std::span<const std::uint8_t> excluded = {});

}  // namespace cayley
