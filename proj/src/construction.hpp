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

// Shared building blocks of the BP_n and EA_n tree constructions.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cayley_steiner/flows.hpp"
#include "cayley_steiner/trees.hpp"

namespace cayley::detail {

void append_path(std::vector<Edge>& tree, std::span<const Vertex> path);

/// Sorts the edge list; throws ConstructionError on a repeated edge.
void finish_tree(std::vector<Edge>& tree, const std::string& trace);

Triple sorted_triple(Triple s);

/// Unwraps a flow result or raises ConstructionError naming the step.
PathSystem expect_paths(const PathResult& result, const std::string& trace);

/**
 * The "pair plus fan" pattern: x and y share a region A, z lies in region B,
 * and every vertex of A has its cross neighbour in B.
 *  - k internally disjoint (x, y)-paths P_i inside A;
 *  - w_i = the neighbour of x on P_i, and w'_i its cross neighbour;
 *  - a k-fan inside B from z to {w'_i} (z itself may be one of them, in
 *    which case that fan path is the single vertex z);
 *  - T_i = P_i + fan path i + the cross edge w_i w'_i.
 */
std::vector<std::vector<Edge>> pair_and_fan(
    const Graph& g, Vertex x, Vertex y, Vertex z, int k,
    std::span<const std::uint8_t> outside_a, std::span<const std::uint8_t> outside_b,
    const std::function<Vertex(Vertex)>& cross, std::vector<std::string>& notes,
    const std::string& trace);

}  // namespace cayley::detail
