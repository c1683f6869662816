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

// Internally edge-disjoint S-tree constructions for burnt pancake graphs.
//
// Attachment vertices are always the lexicographically smallest qualifying
// labels, and transit clusters are taken in the order 1, -1, 2, -2, ...,
// so the output is a pure function of the input triple.

#include <algorithm>
#include <cstdlib>
#include <set>

#include "construction.hpp"

namespace cayley {

namespace {

using detail::append_path;
using detail::expect_paths;
using detail::finish_tree;
using detail::sorted_triple;

std::string trace_of(const BurntPancakeNetwork& bp, const Triple& s,
                     const std::string& label) {
  const Graph& g = bp.graph();
  return "BP_" + std::to_string(bp.n()) + " {" + g.label(s[0]) + "; " +
         g.label(s[1]) + "; " + g.label(s[2]) + "} [" + label + "]";
}

void require_valid(const BurntPancakeNetwork& bp, const Triple& s) {
  for (Vertex v : s) {
    if (!bp.graph().contains(v)) throw std::domain_error("vertex out of range");
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw std::domain_error("S must consist of three distinct vertices");
  }
}

int distinct_clusters(const BurntPancakeNetwork& bp, const Triple& s) {
  std::set<ClusterId> c{bp.cluster_of(s[0]), bp.cluster_of(s[1]),
                        bp.cluster_of(s[2])};
  return static_cast<int>(c.size());
}

STreeSet finish_set(const BurntPancakeNetwork& bp, const Triple& s,
                    std::string label, std::vector<std::vector<Edge>> trees,
                    std::vector<std::string> notes) {
  const int expected = bp.n() == 2 ? 1 : bp.n() - 1;
  if (static_cast<int>(trees.size()) != expected) {
    throw ConstructionError(trace_of(bp, s, label) + ": built " +
                            std::to_string(trees.size()) + " trees");
  }
  STreeSet out;
  out.terminals = s;
  out.trees = std::move(trees);
  out.case_label = std::move(label);
  out.notes = std::move(notes);
  return out;
}

// The lexicographically smallest vertex of `home`, not in `avoid`, whose
// out-neighbour lies in cluster `landing`.
Vertex pick_attachment(const BurntPancakeNetwork& bp, ClusterId home,
                       ClusterId landing, const std::set<Vertex>& avoid,
                       const std::string& trace) {
  Vertex best = -1;
  for (Vertex a : bp.members(home)) {
    if (avoid.count(a) || bp.cluster_of(bp.out_neighbour(a)) != landing) continue;
    if (best < 0 || bp.lex_position(a) < bp.lex_position(best)) best = a;
  }
  if (best < 0) {
    throw ConstructionError(trace + ": no attachment vertex from cluster " +
                            home.to_string() + " into " + landing.to_string());
  }
  return best;
}

VertexMask region_mask(const BurntPancakeNetwork& bp,
                       std::span<const ClusterId> region) {
  VertexMask mask(bp.graph().order(), 1);
  for (ClusterId c : region) {
    for (Vertex v : bp.members(c)) mask[v] = 0;
  }
  return mask;
}

// Tree i collects, for each terminal t, a fan path from t to an attachment
// vertex a in t's cluster, the cross edge a -> â with â in landing[t], and a
// connecting tree inside `region` over the three landing vertices.
struct Route {
  std::array<ClusterId, 3> landing;
  std::vector<ClusterId> region;
};

std::vector<std::vector<Edge>> route_through(const BurntPancakeNetwork& bp,
                                             const Triple& terminals,
                                             std::span<const Route> routes,
                                             const std::string& trace) {
  const Graph& g = bp.graph();
  const int m = static_cast<int>(routes.size());
  std::vector<std::vector<Edge>> trees(m);
  std::vector<std::array<Vertex, 3>> landing_vertex(m);

  for (int t = 0; t < 3; ++t) {
    const Vertex terminal = terminals[t];
    const ClusterId home = bp.cluster_of(terminal);
    std::set<Vertex> avoid(terminals.begin(), terminals.end());
    std::vector<Vertex> picks(m);
    for (int i = 0; i < m; ++i) {
      picks[i] = pick_attachment(bp, home, routes[i].landing[t], avoid, trace);
      avoid.insert(picks[i]);
    }
    const PathSystem& spread = expect_paths(
        fan(g, terminal, picks, m, bp.outside_of(home)),
        trace + " fan from " + g.label(terminal));
    for (const auto& path : spread.paths) {
      const int i = static_cast<int>(
          std::find(picks.begin(), picks.end(), path.back()) - picks.begin());
      append_path(trees[i], path);
      const Vertex across = bp.out_neighbour(path.back());
      trees[i].emplace_back(path.back(), across);
      landing_vertex[i][t] = across;
    }
  }
  for (int i = 0; i < m; ++i) {
    const VertexMask mask = region_mask(bp, routes[i].region);
    auto joint = connecting_tree(g, landing_vertex[i], mask);
    trees[i].insert(trees[i].end(), joint.begin(), joint.end());
    finish_tree(trees[i], trace);
  }
  return trees;
}

STreeSet three_clusters_transit(const BurntPancakeNetwork& bp, const Triple& s,
                                const char* label) {
  const int n = bp.n();
  std::set<int> used;
  for (Vertex v : s) used.insert(std::abs(bp.cluster_of(v).value));
  std::vector<Route> routes;
  for (int idx = 0; idx < 2 * n && static_cast<int>(routes.size()) < n - 1; ++idx) {
    const ClusterId l = ClusterId::from_index(idx);
    if (used.count(std::abs(l.value))) continue;
    routes.push_back({{l, l, l}, {l}});
  }
  const std::string trace = trace_of(bp, s, label);
  if (static_cast<int>(routes.size()) < n - 1) {
    throw ConstructionError(trace + ": not enough transit clusters");
  }
  return finish_set(bp, s, label, route_through(bp, s, routes, trace), {});
}

STreeSet three_clusters_no_opposite_pair(const BurntPancakeNetwork& bp,
                                         const Triple& s) {
  const std::string trace = trace_of(bp, s, case_label::kNoOppositePair);
  const ClusterId j2 = bp.cluster_of(s[1]);
  const ClusterId j3 = bp.cluster_of(s[2]);
  std::set<int> used;
  for (Vertex v : s) used.insert(std::abs(bp.cluster_of(v).value));
  int free_symbol = 1;
  while (used.count(free_symbol)) ++free_symbol;
  const ClusterId d{free_symbol};
  // Two trees through clusters d and -d; the third through -j2 and -j3,
  // with the first and third terminal landing in -j2, the second in -j3.
  const std::vector<Route> routes = {
      {{d, d, d}, {d}},
      {{d.opposite(), d.opposite(), d.opposite()}, {d.opposite()}},
      {{j2.opposite(), j3.opposite(), j2.opposite()},
       {j2.opposite(), j3.opposite()}},
  };
  return finish_set(bp, s, case_label::kNoOppositePair,
                    route_through(bp, s, routes, trace), {});
}

// n = 3: H is the union of the three home clusters. A terminal is blocked
// when its out-neighbour lies in H; it is then rerouted through a cluster
// neighbour whose out-neighbour leaves H. One tree stays inside H (minus
// the rerouting vertices), the other runs through BP_3 - H.
STreeSet three_clusters_small(const BurntPancakeNetwork& bp, const Triple& s) {
  const Graph& g = bp.graph();
  std::set<ClusterId> home;
  for (Vertex v : s) home.insert(bp.cluster_of(v));
  auto in_h = [&](Vertex v) { return home.count(bp.cluster_of(v)) > 0; };

  VertexMask outside_h(g.order(), 0);
  VertexMask inside_h(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) (in_h(v) ? inside_h : outside_h)[v] = 1;

  std::vector<int> blocked;
  std::vector<std::vector<Vertex>> candidates;
  for (int t = 0; t < 3; ++t) {
    if (!in_h(bp.out_neighbour(s[t]))) continue;
    blocked.push_back(t);
    std::vector<Vertex> options;
    for (Vertex u : g.neighbors(s[t])) {
      if (bp.cluster_of(u) == bp.cluster_of(s[t]) && !in_h(bp.out_neighbour(u))) {
        options.push_back(u);
      }
    }
    std::sort(options.begin(), options.end(), [&](Vertex a, Vertex b) {
      return bp.lex_position(a) < bp.lex_position(b);
    });
    candidates.push_back(std::move(options));
  }
  const char* label = blocked.empty()       ? case_label::kNoneBlocked
                      : blocked.size() == 1 ? case_label::kOneBlocked
                                            : case_label::kSeveralBlocked;
  const std::string trace = trace_of(bp, s, label);
  for (const auto& options : candidates) {
    if (options.empty()) {
      throw ConstructionError(trace + ": blocked terminal without a reroute");
    }
  }

  // Reroute choices are tried in lexicographic order; the first choice works
  // unless removing the rerouting vertices disconnects S inside H.
  std::vector<std::size_t> choice(blocked.size(), 0);
  std::vector<std::string> notes;
  for (int attempt = 0;; ++attempt) {
    std::array<Vertex, 3> reroute{-1, -1, -1};
    VertexMask mask = outside_h;
    for (std::size_t b = 0; b < blocked.size(); ++b) {
      reroute[blocked[b]] = candidates[b][choice[b]];
      mask[reroute[blocked[b]]] = 1;
    }
    try {
      std::vector<std::vector<Edge>> trees(2);
      trees[0] = connecting_tree(g, s, mask);
      std::array<Vertex, 3> exits{};
      for (int t = 0; t < 3; ++t) {
        if (reroute[t] >= 0) {
          trees[1].emplace_back(s[t], reroute[t]);
          exits[t] = bp.out_neighbour(reroute[t]);
          trees[1].emplace_back(reroute[t], exits[t]);
        } else {
          exits[t] = bp.out_neighbour(s[t]);
          trees[1].emplace_back(s[t], exits[t]);
        }
      }
      auto outer = connecting_tree(g, exits, inside_h);
      trees[1].insert(trees[1].end(), outer.begin(), outer.end());
      finish_tree(trees[0], trace);
      finish_tree(trees[1], trace);
      if (attempt > 0) {
        notes.push_back("reroute choice " + std::to_string(attempt) +
                        " used after earlier choices disconnected H");
      }
      return finish_set(bp, s, label, std::move(trees), std::move(notes));
    } catch (const ConstructionError&) {
      std::size_t b = 0;
      while (b < choice.size() && ++choice[b] == candidates[b].size()) {
        choice[b] = 0;
        ++b;
      }
      if (b == choice.size()) throw;
    }
  }
}

}  // namespace

std::vector<std::string> bp_case_labels(int n) {
  if (n == 2) return {case_label::kBaseCycle};
  std::vector<std::string> labels = {case_label::kSameCluster,
                                     case_label::kTwoClusters};
  if (n >= 5) {
    labels.push_back(case_label::kTransitClusters);
  } else if (n == 4) {
    labels.push_back(case_label::kOppositePair);
    labels.push_back(case_label::kNoOppositePair);
  } else {
    labels.push_back(case_label::kNoneBlocked);
    labels.push_back(case_label::kOneBlocked);
    labels.push_back(case_label::kSeveralBlocked);
  }
  return labels;
}

std::string classify_bp(const BurntPancakeNetwork& bp, Triple s) {
  require_valid(bp, s);
  if (bp.n() == 2) return case_label::kBaseCycle;
  switch (distinct_clusters(bp, s)) {
    case 1:
      return case_label::kSameCluster;
    case 2:
      return case_label::kTwoClusters;
    default:
      break;
  }
  if (bp.n() >= 5) return case_label::kTransitClusters;
  if (bp.n() == 4) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (bp.cluster_of(s[a]) == bp.cluster_of(s[b]).opposite()) {
          return case_label::kOppositePair;
        }
      }
    }
    return case_label::kNoOppositePair;
  }
  std::set<ClusterId> home{bp.cluster_of(s[0]), bp.cluster_of(s[1]),
                           bp.cluster_of(s[2])};
  int blocked = 0;
  for (Vertex v : s) blocked += home.count(bp.cluster_of(bp.out_neighbour(v))) > 0;
  return blocked == 0   ? case_label::kNoneBlocked
         : blocked == 1 ? case_label::kOneBlocked
                        : case_label::kSeveralBlocked;
}

STreeSet bp_trees(const BurntPancakeNetwork& bp, Triple s) {
  require_valid(bp, s);
  s = sorted_triple(s);
  if (bp.n() == 2) {
    std::vector<std::vector<Edge>> trees{connecting_tree(bp.graph(), s)};
    return finish_set(bp, s, case_label::kBaseCycle, std::move(trees), {});
  }
  switch (distinct_clusters(bp, s)) {
    case 1:
      return bp_trees_same_cluster(bp, s);
    case 2:
      return bp_trees_two_clusters(bp, s);
    default:
      return bp_trees_three_clusters(bp, s);
  }
}

STreeSet bp_trees_same_cluster(const BurntPancakeNetwork& bp, Triple s) {
  require_valid(bp, s);
  s = sorted_triple(s);
  const ClusterId c = bp.cluster_of(s[0]);
  if (distinct_clusters(bp, s) != 1 || bp.lower() == nullptr) {
    throw std::domain_error("same-cluster construction needs S inside one cluster");
  }
  const std::string trace = trace_of(bp, s, case_label::kSameCluster);
  const Graph& g = bp.graph();

  Triple inner_s{};
  for (int t = 0; t < 3; ++t) inner_s[t] = bp.relabel_to_lower(s[t]);
  STreeSet inner;
  try {
    inner = bp_trees(*bp.lower(), inner_s);
  } catch (const ConstructionError& e) {
    throw ConstructionError(trace + " <- " + e.what());
  }

  std::vector<std::vector<Edge>> trees;
  for (const auto& lower_tree : inner.trees) {
    std::vector<Edge> tree;
    for (const Edge& e : lower_tree) {
      tree.emplace_back(bp.embed_from_lower(e.u, c), bp.embed_from_lower(e.v, c));
    }
    finish_tree(tree, trace);
    trees.push_back(std::move(tree));
  }
  std::vector<std::string> notes{"inner " + inner.case_label};
  for (const auto& note : inner.notes) notes.push_back("inner: " + note);

  std::array<Vertex, 3> exits{};
  for (int t = 0; t < 3; ++t) exits[t] = bp.out_neighbour(s[t]);
  std::vector<Edge> outer = connecting_tree(g, exits, bp.inside_of(c));
  for (int t = 0; t < 3; ++t) outer.emplace_back(s[t], exits[t]);
  finish_tree(outer, trace);
  trees.push_back(std::move(outer));
  return finish_set(bp, s, case_label::kSameCluster, std::move(trees),
                    std::move(notes));
}

STreeSet bp_trees_two_clusters(const BurntPancakeNetwork& bp, Triple s) {
  require_valid(bp, s);
  s = sorted_triple(s);
  if (distinct_clusters(bp, s) != 2) {
    throw std::domain_error("two-cluster construction needs S in two clusters");
  }
  // x, y: the first pair sharing a cluster; z: the remaining terminal.
  int a = 0, b = 1, c = 2;
  if (bp.cluster_of(s[0]) == bp.cluster_of(s[2])) {
    b = 2;
    c = 1;
  } else if (bp.cluster_of(s[1]) == bp.cluster_of(s[2])) {
    a = 1;
    b = 2;
    c = 0;
  }
  const ClusterId shared = bp.cluster_of(s[a]);
  const std::string trace = trace_of(bp, s, case_label::kTwoClusters);
  std::vector<std::string> notes;
  auto trees = detail::pair_and_fan(
      bp.graph(), s[a], s[b], s[c], bp.n() - 1, bp.outside_of(shared),
      bp.inside_of(shared), [&](Vertex v) { return bp.out_neighbour(v); }, notes,
      trace);
  return finish_set(bp, s, case_label::kTwoClusters, std::move(trees),
                    std::move(notes));
}

STreeSet bp_trees_three_clusters(const BurntPancakeNetwork& bp, Triple s) {
  require_valid(bp, s);
  s = sorted_triple(s);
  if (bp.n() < 3 || distinct_clusters(bp, s) != 3) {
    throw std::domain_error("three-cluster construction needs S in three clusters");
  }
  const std::string label = classify_bp(bp, s);
  if (label == case_label::kTransitClusters || label == case_label::kOppositePair) {
    return three_clusters_transit(bp, s, label.c_str());
  }
  if (label == case_label::kNoOppositePair) {
    return three_clusters_no_opposite_pair(bp, s);
  }
  return three_clusters_small(bp, s);
}

}  // namespace cayley
