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

#include <array>
#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cayley_steiner/graph.hpp"
#include "cayley_steiner/perm.hpp"

namespace cayley {

/// Largest n accepted by the graph builders.
inline constexpr int kMaxBurntPancakeN = 7;
inline constexpr int kMaxGodanN = 9;

/**
 * Identifies a cluster: a signed symbol in [[n]] for burnt pancake graphs
 * (the fixed last symbol), or the part index 1 (even) / 2 (odd) for godan
 * graphs. Clusters order as 1 < -1 < 2 < -2 < ...
 */
struct ClusterId {
  int value = 1;

  /// Dense index under the cluster ordering: 1 -> 0, -1 -> 1, 2 -> 2, ...
  int index() const { return 2 * ((value < 0 ? -value : value) - 1) + (value < 0); }
  static ClusterId from_index(int index) {
    const int magnitude = index / 2 + 1;
    return ClusterId{index % 2 ? -magnitude : magnitude};
  }
  ClusterId opposite() const { return ClusterId{-value}; }
  std::string to_string() const { return std::to_string(value); }

  bool operator==(const ClusterId&) const = default;
  std::strong_ordering operator<=>(const ClusterId& other) const {
    return index() <=> other.index();
  }
};

/// Partition of BP_n into the 2n clusters BP_n^i.
struct ClusterDecomposition {
  int n = 0;
  std::vector<ClusterId> cluster_of;
  /// Indexed by ClusterId::index(); each list ascending.
  std::vector<std::vector<Vertex>> members;

  std::span<const Vertex> members_of(ClusterId c) const {
    return members[c.index()];
  }
  int cluster_count() const { return static_cast<int>(members.size()); }
};

/// BP_n: vertex r is unrank_signed(n, r); x ~ x^i for 1 <= i <= n.
Graph build_burnt_pancake(int n);
/// AN_n: vertices are the even permutations in ascending rank order.
Graph build_alternating_network(int n);
/// EA_n: vertex r is unrank_permutation(n, r).
Graph build_godan(int n);

ClusterDecomposition cluster_decomposition(const Graph& g, int n);

/// x^n, the unique neighbour of x outside its cluster.
SignedPermutation out_neighbour_bp(const SignedPermutation& x);
/// u (12), the matching partner of u in the other parity class.
Permutation out_neighbour_ea(const Permutation& u);

/// Edges with one endpoint in each of two distinct clusters.
std::vector<Edge> cross_edge_set(const Graph& g, const ClusterDecomposition& dec,
                                 ClusterId i, ClusterId j);

/// Drops the last symbol and maps the remaining absolute values
/// order-preservingly onto [n-1], keeping signs.
SignedPermutation cluster_relabel(const SignedPermutation& x);
/// Inverse of cluster_relabel for the cluster with last symbol j.
SignedPermutation cluster_embed(const SignedPermutation& y, ClusterId j);

/// BP_n with cluster j deleted (induced subgraph, labels kept).
Graph punctured_bp(int n, ClusterId j);

/**
 * BP_n with its cluster structure precomputed: out-neighbours, per-cluster
 * masks and the link to BP_{n-1} used by the recursive constructions.
 */
class BurntPancakeNetwork {
 public:
  explicit BurntPancakeNetwork(int n);

  int n() const { return n_; }
  const Graph& graph() const { return graph_; }
  const ClusterDecomposition& clusters() const { return clusters_; }
  ClusterId cluster_of(Vertex v) const { return clusters_.cluster_of[v]; }
  std::span<const Vertex> members(ClusterId c) const {
    return clusters_.members_of(c);
  }

  Vertex out_neighbour(Vertex v) const { return out_neighbour_[v]; }
  SignedPermutation label(Vertex v) const;
  Vertex vertex_of(const SignedPermutation& x) const;
  /// Position of the label in lexicographic order of the entry sequences.
  int lex_position(Vertex v) const { return lex_position_[v]; }

  /// Mask excluding every vertex outside cluster c.
  const VertexMask& outside_of(ClusterId c) const { return outside_[c.index()]; }
  /// Mask excluding every vertex of cluster c.
  const VertexMask& inside_of(ClusterId c) const { return inside_[c.index()]; }

  /// BP_{n-1}; null when n == 2.
  const BurntPancakeNetwork* lower() const { return lower_.get(); }
  Vertex relabel_to_lower(Vertex v) const;
  Vertex embed_from_lower(Vertex lower_vertex, ClusterId c) const;

 private:
  int n_;
  Graph graph_;
  ClusterDecomposition clusters_;
  std::vector<Vertex> out_neighbour_;
  std::vector<int> lex_position_;
  std::vector<VertexMask> outside_;
  std::vector<VertexMask> inside_;
  std::unique_ptr<BurntPancakeNetwork> lower_;
  std::vector<Vertex> to_lower_;
  /// [cluster index][lower vertex] -> vertex of this network.
  std::vector<std::vector<Vertex>> from_lower_;
};

/**
 * EA_n split into AN_n^1 (even permutations, part 1) and AN_n^2 (odd,
 * part 2), joined by the perfect matching u -> u (12).
 */
class GodanNetwork {
 public:
  explicit GodanNetwork(int n);

  int n() const { return n_; }
  const Graph& graph() const { return graph_; }
  /// 1 for even vertices, 2 for odd ones.
  int part_of(Vertex v) const { return part_[v]; }
  Vertex out_neighbour(Vertex v) const { return out_neighbour_[v]; }
  Permutation label(Vertex v) const;
  Vertex vertex_of(const Permutation& p) const;
  /// Ranks are lexicographic for plain permutations.
  int lex_position(Vertex v) const { return v; }

  std::span<const Vertex> members(int part) const { return members_[part - 1]; }
  /// Mask excluding every vertex outside the given part.
  const VertexMask& outside_of(int part) const { return outside_[part - 1]; }
  /// Induced subgraph on one part (isomorphic to AN_n).
  const Subgraph& part_graph(int part) const { return parts_[part - 1]; }

 private:
  int n_;
  Graph graph_;
  std::vector<int> part_;
  std::vector<Vertex> out_neighbour_;
  std::array<std::vector<Vertex>, 2> members_;
  std::array<VertexMask, 2> outside_;
  std::array<Subgraph, 2> parts_;
};

}  // namespace cayley
