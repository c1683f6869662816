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
#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley_steiner/graph.hpp"
#include "cayley_steiner/topology.hpp"

namespace cayley {

using Triple = std::array<Vertex, 3>;

/**
 * Trees connecting a common 3-set S. The builders guarantee that every tree
 * contains S, that any two trees share exactly the vertices of S, and that
 * no edge is used twice.
 */
struct STreeSet {
  /// Ascending vertex indices.
  Triple terminals{};
  /// Each tree as an ascending edge list.
  std::vector<std::vector<Edge>> trees;
  /// Which branch of the construction produced the set.
  std::string case_label;
  /// Nested labels of recursive calls and degenerate-case remarks.
  std::vector<std::string> notes;
};

/// Raised when a construction step cannot be completed. The message carries
/// the case trace.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Case labels recorded in STreeSet::case_label.
namespace case_label {
inline constexpr const char* kBaseCycle = "base-cycle";
inline constexpr const char* kSameCluster = "same-cluster";
inline constexpr const char* kTwoClusters = "two-clusters";
inline constexpr const char* kTransitClusters = "three-clusters/transit";
inline constexpr const char* kOppositePair = "three-clusters/opposite-pair";
inline constexpr const char* kNoOppositePair = "three-clusters/no-opposite-pair";
inline constexpr const char* kNoneBlocked = "three-clusters/none-blocked";
inline constexpr const char* kOneBlocked = "three-clusters/one-blocked";
inline constexpr const char* kSeveralBlocked = "three-clusters/several-blocked";
inline constexpr const char* kEvenTriple = "even-part-triple";
inline constexpr const char* kEvenPair = "even-part-pair";
inline constexpr const char* kOddPair = "odd-part-pair";
inline constexpr const char* kOddTriple = "odd-part-triple";
inline constexpr const char* kGenericPacking = "generic-packing";
}  // namespace case_label

/// Every case label bp_trees can emit at the given n (top level only).
std::vector<std::string> bp_case_labels(int n);
std::vector<std::string> ea_case_labels(int n);

/// Top-level case label bp_trees would record for S, without building.
std::string classify_bp(const BurntPancakeNetwork& bp, Triple s);
std::string classify_ea(const GodanNetwork& ea, Triple s);

/// n - 1 internally edge-disjoint S-trees in BP_n (one for n = 2).
/// Throws std::domain_error for repeated vertices.
STreeSet bp_trees(const BurntPancakeNetwork& bp, Triple s);

/// All of S in one cluster: n - 2 trees from BP_{n-1} inside the cluster
/// plus one tree outside it joined by the three cross edges.
STreeSet bp_trees_same_cluster(const BurntPancakeNetwork& bp, Triple s);
/// Two of S share a cluster: disjoint paths between them inside the cluster,
/// each continued across its first edge's cross edge and fanned to the third.
STreeSet bp_trees_two_clusters(const BurntPancakeNetwork& bp, Triple s);
/// S meets three clusters; dispatches on n (transit clusters for n >= 5,
/// the opposite-pair split for n = 4, blocked out-neighbours for n = 3).
STreeSet bp_trees_three_clusters(const BurntPancakeNetwork& bp, Triple s);

struct PackingOptions {
  /// Wall-clock cap for the exact search; zero means unlimited.
  std::chrono::milliseconds budget{0};
};

enum class PackingStatus { found, infeasible, indeterminate };

struct PackingResult {
  PackingStatus status = PackingStatus::indeterminate;
  STreeSet trees;
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for k internally edge-disjoint S-trees.
/// infeasible is only reported after the search space is exhausted.
PackingResult generic_stree_packing(const Graph& g, Triple s, int k,
                                    const PackingOptions& options = {});

/// n - 1 internally edge-disjoint S-trees in EA_n. Triples inside one part
/// use generic_stree_packing for the n - 2 trees within the part.
STreeSet ea_trees(const GodanNetwork& ea, Triple s,
                  const PackingOptions& options = {});

/// Breadth-first Steiner tree: BFS from the first terminal, then attaches
/// each further terminal by a shortest path to the tree built so far.
/// Throws ConstructionError when a terminal is unreachable.
std::vector<Edge> connecting_tree(const Graph& g, std::span<const Vertex> terminals,
                                  std::span<const std::uint8_t> excluded = {});

}  // namespace cayley
