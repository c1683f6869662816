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

#include "cayley_steiner/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cayley {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency,
             std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  const int n = order();
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("multi-edge at vertex " + std::to_string(v));
    }
    for (Vertex w : list) {
      if (w < 0 || w >= n) throw std::invalid_argument("neighbor out of range");
      if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    }
    degree_sum += list.size();
  }
  for (int v = 0; v < n; ++v) {
    for (Vertex w : adjacency_[v]) {
      if (!std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), v)) {
        throw std::invalid_argument("asymmetric adjacency");
      }
    }
  }
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(int order, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  std::vector<std::vector<Vertex>> adjacency(order);
  for (const Edge& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  return Graph(std::move(adjacency), std::move(labels));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (int v = 0; v < order(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : degree(0);
  for (int v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int v = 0; v < order(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

bool Graph::is_connected(std::span<const std::uint8_t> excluded) const {
  auto component = connected_components(*this, excluded);
  return std::none_of(component.begin(), component.end(),
                      [](int c) { return c > 0; });
}

std::vector<int> connected_components(const Graph& g,
                                      std::span<const std::uint8_t> excluded) {
  const int n = g.order();
  auto blocked = [&](Vertex v) { return !excluded.empty() && excluded[v]; };
  std::vector<int> component(n, -1);
  int next = 0;
  std::deque<Vertex> queue;
  for (int s = 0; s < n; ++s) {
    if (blocked(s) || component[s] >= 0) continue;
    component[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (blocked(w) || component[w] >= 0) continue;
        component[w] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }
  return component;
}

Subgraph induced_subgraph(const Graph& host, std::span<const Vertex> keep) {
  Subgraph sub;
  sub.to_host.assign(keep.begin(), keep.end());
  std::sort(sub.to_host.begin(), sub.to_host.end());
  sub.to_host.erase(std::unique(sub.to_host.begin(), sub.to_host.end()),
                    sub.to_host.end());
  sub.from_host.assign(host.order(), -1);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    sub.from_host[sub.to_host[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adjacency(sub.to_host.size());
  std::vector<std::string> labels;
  labels.reserve(sub.to_host.size());
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    const Vertex h = sub.to_host[i];
    labels.push_back(host.label(h));
    for (Vertex w : host.neighbors(h)) {
      if (sub.from_host[w] >= 0) adjacency[i].push_back(sub.from_host[w]);
    }
  }
  sub.graph = Graph(std::move(adjacency), std::move(labels));
  return sub;
}

}  // namespace cayley
