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

#include "cayley_steiner/flows.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cayley {

namespace {

constexpr int kInfinite = INT_MAX / 4;

// Residual network over the vertex-split digraph: vertex v owns nodes
// 2v (in) and 2v + 1 (out). Extra nodes (super source / sink) follow.
class SplitNetwork {
 public:
  explicit SplitNetwork(int vertex_count)
      : vertex_count_(vertex_count), out_arcs_(2 * vertex_count) {}

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

  int add_node() {
    out_arcs_.emplace_back();
    return static_cast<int>(out_arcs_.size()) - 1;
  }

  void add_arc(int from, int to, int capacity) {
    out_arcs_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, 0});
    out_arcs_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  void reset() {
    for (auto& a : arcs_) a.flow = 0;
  }

  // Shortest augmenting paths, arcs scanned in insertion order.
  int max_flow(int source, int sink, int limit) {
    int value = 0;
    std::vector<int> parent_arc(out_arcs_.size());
    std::deque<int> queue;
    while (value < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      parent_arc[source] = -2;
      queue.assign(1, source);
      while (!queue.empty() && parent_arc[sink] == -1) {
        const int node = queue.front();
        queue.pop_front();
        for (int id : out_arcs_[node]) {
          const Arc& a = arcs_[id];
          if (parent_arc[a.to] != -1 || a.capacity - a.flow <= 0) continue;
          parent_arc[a.to] = id;
          queue.push_back(a.to);
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int node = sink; node != source;) {
        const int id = parent_arc[node];
        arcs_[id].flow += 1;
        arcs_[id ^ 1].flow -= 1;
        node = arcs_[id ^ 1].to;
      }
      ++value;
    }
    return value;
  }

  std::vector<char> residual_reachable(int source) const {
    std::vector<char> seen(out_arcs_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      for (int id : out_arcs_[node]) {
        const Arc& a = arcs_[id];
        if (seen[a.to] || a.capacity - a.flow <= 0) continue;
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
    return seen;
  }

  // Vertices meeting every saturated arc that leaves the residual source
  // side. An edge arc is charged to its head unless the head is the sink,
  // then to its tail; a direct source-sink arc has no vertex to charge.
  std::vector<Vertex> min_cut(int source, int sink) const {
    const auto seen = residual_reachable(source);
    const int vertex_nodes = 2 * vertex_count_;
    std::set<Vertex> cut;
    for (std::size_t id = 0; id < arcs_.size(); id += 2) {
      const int to = arcs_[id].to;
      const int from = arcs_[id ^ 1].to;
      if (!seen[from] || seen[to] || arcs_[id].capacity == 0) continue;
      if (to < vertex_nodes && to != sink) {
        cut.insert(to / 2);
      } else if (from < vertex_nodes && from != source) {
        cut.insert(from / 2);
      }
    }
    return {cut.begin(), cut.end()};
  }

  // Walks one unit of flow from source to sink, consuming it. At each node
  // the first arc in insertion order with positive flow is taken.
  std::vector<Vertex> take_path(int source, int sink) {
    std::vector<Vertex> path;
    int node = source;
    auto record = [&](int n) {
      if (n >= 2 * vertex_count_) return;
      const Vertex v = n / 2;
      if (path.empty() || path.back() != v) path.push_back(v);
    };
    record(node);
    while (node != sink) {
      int next = -1;
      for (int id : out_arcs_[node]) {
        if (id % 2 == 0 && arcs_[id].flow > 0) {
          arcs_[id].flow -= 1;
          arcs_[id ^ 1].flow += 1;
          next = arcs_[id].to;
          break;
        }
      }
      if (next < 0) throw std::logic_error("flow decomposition stalled");
      node = next;
      record(node);
    }
    return path;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  int vertex_count_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<Arc> arcs_;
};

bool is_excluded(std::span<const std::uint8_t> excluded, Vertex v) {
  return !excluded.empty() && excluded[v];
}

void require_vertex(const Graph& g, Vertex v,
                    std::span<const std::uint8_t> excluded) {
  if (!g.contains(v)) throw std::domain_error("vertex out of range");
  if (is_excluded(excluded, v)) {
    throw std::domain_error("terminal vertex " + std::to_string(v) +
                            " is excluded");
  }
}

// Adds in->out arcs for every usable vertex (except those in no_pass) and
// out->in arcs for every usable edge (except those entering no_enter).
void add_graph_arcs(SplitNetwork& net, const Graph& g,
                    std::span<const std::uint8_t> excluded,
                    const std::vector<char>& no_pass,
                    const std::vector<char>& no_enter) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_excluded(excluded, v)) continue;
    if (no_pass.empty() || !no_pass[v]) {
      net.add_arc(SplitNetwork::in(v), SplitNetwork::out(v), 1);
    }
    for (Vertex w : g.neighbors(v)) {
      if (is_excluded(excluded, w)) continue;
      if (!no_enter.empty() && no_enter[w]) continue;
      net.add_arc(SplitNetwork::out(v), SplitNetwork::in(w), 1);
    }
  }
}

}  // namespace

std::string FlowFailure::describe() const {
  std::string out = "requested " + std::to_string(requested) +
                    " disjoint paths, found " + std::to_string(achieved) +
                    "; separator {";
  for (std::size_t i = 0; i < cut.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cut[i]);
  }
  return out + "}";
}

const PathSystem& PathResult::value() const {
  if (!ok()) throw std::runtime_error(failure().describe());
  return std::get<PathSystem>(state_);
}

int local_connectivity(const Graph& g, Vertex x, Vertex y, int cap,
                       std::span<const std::uint8_t> excluded) {
  require_vertex(g, x, excluded);
  require_vertex(g, y, excluded);
  if (x == y) throw std::domain_error("local connectivity needs x != y");
  SplitNetwork net(g.order());
  add_graph_arcs(net, g, excluded, {}, {});
  return net.max_flow(SplitNetwork::out(x), SplitNetwork::in(y), cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !g.is_connected()) return 0;
  if (g.min_degree() == n - 1) return n - 1;

  // Esfahanian-Hakimi: with v of minimum degree, some minimum separator
  // either misses v (so it separates v from a non-neighbour) or contains v
  // (so it separates two neighbours of v).
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  SplitNetwork net(n);
  add_graph_arcs(net, g, {}, {}, {});
  int best = g.degree(v);
  auto probe = [&](Vertex a, Vertex b) {
    net.reset();
    best = std::min(best, net.max_flow(SplitNetwork::out(a),
                                       SplitNetwork::in(b), best));
  };
  for (Vertex w = 0; w < n && best > 0; ++w) {
    if (w != v && !g.adjacent(v, w)) probe(v, w);
  }
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.adjacent(nbrs[i], nbrs[j])) probe(nbrs[i], nbrs[j]);
    }
  }
  return best;
}

PathResult internally_disjoint_paths(const Graph& g, Vertex x, Vertex y, int k,
                                     std::span<const std::uint8_t> excluded) {
  require_vertex(g, x, excluded);
  require_vertex(g, y, excluded);
  if (x == y) throw std::domain_error("internally disjoint paths need x != y");
  SplitNetwork net(g.order());
  add_graph_arcs(net, g, excluded, {}, {});
  const int source = SplitNetwork::out(x);
  const int sink = SplitNetwork::in(y);
  const int value = net.max_flow(source, sink, k);
  if (value < k) return FlowFailure{k, value, net.min_cut(source, sink)};
  PathSystem system;
  system.kind = PathKind::internally_disjoint;
  system.sources = {x};
  system.targets = {y};
  for (int i = 0; i < k; ++i) system.paths.push_back(net.take_path(source, sink));
  std::sort(system.paths.begin(), system.paths.end());
  return system;
}

PathResult fan(const Graph& g, Vertex x, std::span<const Vertex> targets, int k,
               std::span<const std::uint8_t> excluded) {
  require_vertex(g, x, excluded);
  std::vector<char> is_target(g.order(), 0);
  for (Vertex y : targets) {
    require_vertex(g, y, excluded);
    if (y == x) throw std::domain_error("fan source lies in the target set");
    is_target[y] = 1;
  }
  SplitNetwork net(g.order());
  add_graph_arcs(net, g, excluded, is_target, {});
  const int sink = net.add_node();
  for (Vertex y = 0; y < g.order(); ++y) {
    if (is_target[y]) net.add_arc(SplitNetwork::in(y), sink, 1);
  }
  const int source = SplitNetwork::out(x);
  const int value = net.max_flow(source, sink, k);
  if (value < k) return FlowFailure{k, value, net.min_cut(source, sink)};
  PathSystem system;
  system.kind = PathKind::fan;
  system.sources = {x};
  system.targets.assign(targets.begin(), targets.end());
  for (int i = 0; i < k; ++i) system.paths.push_back(net.take_path(source, sink));
  std::sort(system.paths.begin(), system.paths.end());
  return system;
}

PathResult disjoint_linkage(const Graph& g, std::span<const Vertex> sources,
                            std::span<const Vertex> targets, int k,
                            std::span<const std::uint8_t> excluded) {
  std::vector<char> is_source(g.order(), 0);
  std::vector<char> is_target(g.order(), 0);
  for (Vertex v : sources) {
    require_vertex(g, v, excluded);
    is_source[v] = 1;
  }
  for (Vertex v : targets) {
    require_vertex(g, v, excluded);
    is_target[v] = 1;
  }
  SplitNetwork net(g.order());
  add_graph_arcs(net, g, excluded, is_target, is_source);
  const int source = net.add_node();
  const int sink = net.add_node();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_source[v]) net.add_arc(source, SplitNetwork::in(v), 1);
    if (is_target[v]) net.add_arc(SplitNetwork::in(v), sink, 1);
  }
  const int value = net.max_flow(source, sink, k);
  if (value < k) return FlowFailure{k, value, net.min_cut(source, sink)};
  PathSystem system;
  system.kind = PathKind::linkage;
  system.sources.assign(sources.begin(), sources.end());
  system.targets.assign(targets.begin(), targets.end());
  for (int i = 0; i < k; ++i) system.paths.push_back(net.take_path(source, sink));
  std::sort(system.paths.begin(), system.paths.end());
  return system;
}

std::string validate_path_system(const Graph& g, const PathSystem& system) {
  const std::set<Vertex> sources(system.sources.begin(), system.sources.end());
  const std::set<Vertex> targets(system.targets.begin(), system.targets.end());
  std::set<Vertex> claimed;
  std::set<Vertex> termini;
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    const auto& path = system.paths[p];
    const std::string where = "path " + std::to_string(p) + ": ";
    if (path.empty()) return where + "empty";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!g.contains(path[i])) return where + "vertex out of range";
      if (i > 0 && !g.adjacent(path[i - 1], path[i])) {
        return where + "non-adjacent step " + std::to_string(path[i - 1]) +
               "-" + std::to_string(path[i]);
      }
    }
    if (std::set<Vertex>(path.begin(), path.end()).size() != path.size()) {
      return where + "repeated vertex";
    }
    if (!sources.count(path.front())) return where + "does not start at a source";
    if (!targets.count(path.back())) return where + "does not end at a target";
    if (system.kind != PathKind::internally_disjoint &&
        !termini.insert(path.back()).second) {
      return where + "terminus reused";
    }
    // Vertices that must not be shared with any other path.
    std::vector<Vertex> own;
    switch (system.kind) {
      case PathKind::internally_disjoint:
        if (path.size() < 2) return where + "too short";
        own.assign(path.begin() + 1, path.end() - 1);
        break;
      case PathKind::fan:
        if (path.size() < 2) return where + "too short";
        own.assign(path.begin() + 1, path.end());
        break;
      case PathKind::linkage:
        own = path;
        break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (sources.count(path[i]) || targets.count(path[i])) {
        return where + "internal vertex " + std::to_string(path[i]) +
               " lies in a terminal set";
      }
    }
    for (Vertex v : own) {
      if (!claimed.insert(v).second) {
        return where + "vertex " + std::to_string(v) + " shared between paths";
      }
    }
  }
  return {};
}

}  // namespace cayley
