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

#include <span>
#include <string>

#include "cayley_steiner/graph.hpp"
#include "cayley_steiner/trees.hpp"

namespace cayley {

/// {"order": N, "edges": [[u, v], ...], "labels": [...]}, edges ascending.
std::string graph_to_json(const Graph& g);

/// Undirected DOT. When `groups` is non-empty, vertex v is filled with a
/// colour chosen by groups[v] (cluster index or part).
std::string graph_to_dot(const Graph& g, std::span<const int> groups = {});

/// {"family", "n", "S": [labels], "case", "trees": [[[u, v], ...], ...],
///  "notes"}. Tree edges are given as label pairs.
std::string stree_set_to_json(const std::string& family, int n, const Graph& g,
                              const STreeSet& set);

}  // namespace cayley
