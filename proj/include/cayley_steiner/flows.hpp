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

// Menger-type path systems computed by unit-capacity maximum flow on the
// vertex-split digraph. Every operation accepts an optional exclusion mask;
// excluded vertices are treated as deleted from the graph.

#pragma once

#include <climits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cayley_steiner/graph.hpp"

namespace cayley {

enum class PathKind { internally_disjoint, fan, linkage };

struct PathSystem {
  PathKind kind = PathKind::internally_disjoint;
  std::vector<std::vector<Vertex>> paths;
  /// (x, y) for internally disjoint paths; x only for fans.
  std::vector<Vertex> sources;
  /// y for internally disjoint paths; Y for fans and linkages.
  std::vector<Vertex> targets;
};

/// Why a path system could not be found: the flow value reached and a
/// minimum vertex separator witnessing it.
struct FlowFailure {
  int requested = 0;
  int achieved = 0;
  std::vector<Vertex> cut;

  std::string describe() const;
};

class PathResult {
 public:
  PathResult(PathSystem system) : state_(std::move(system)) {}
  PathResult(FlowFailure failure) : state_(std::move(failure)) {}

  bool ok() const { return std::holds_alternative<PathSystem>(state_); }
  explicit operator bool() const { return ok(); }

  /// Throws std::runtime_error carrying the failure description.
  const PathSystem& value() const;
  const FlowFailure& failure() const { return std::get<FlowFailure>(state_); }

 private:
  std::variant<PathSystem, FlowFailure> state_;
};

/// Maximum number of internally disjoint (x, y)-paths, stopping at cap.
int local_connectivity(const Graph& g, Vertex x, Vertex y, int cap = INT_MAX,
                       std::span<const std::uint8_t> excluded = {});

/// kappa(G); 0 for disconnected graphs, order - 1 for complete graphs.
int vertex_connectivity(const Graph& g);

PathResult internally_disjoint_paths(const Graph& g, Vertex x, Vertex y, int k,
                                     std::span<const std::uint8_t> excluded = {});

/// k paths from x ending at distinct vertices of targets, sharing only x and
/// with no internal vertex in targets. Requires x not in targets.
PathResult fan(const Graph& g, Vertex x, std::span<const Vertex> targets, int k,
               std::span<const std::uint8_t> excluded = {});

/// k pairwise vertex-disjoint paths from sources to targets with no internal
/// vertex in either set. A vertex in both sets forms a one-vertex path.
PathResult disjoint_linkage(const Graph& g, std::span<const Vertex> sources,
                            std::span<const Vertex> targets, int k,
                            std::span<const std::uint8_t> excluded = {});

/// Re-checks a path system against its contract. Returns an empty string
/// when valid, otherwise the first violation found.
std::string validate_path_system(const Graph& g, const PathSystem& system);

}  // namespace cayley
