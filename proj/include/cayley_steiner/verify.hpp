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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley_steiner/graph.hpp"
#include "cayley_steiner/trees.hpp"

namespace cayley {

struct CheckResult {
  bool ok = true;
  /// Empty when ok; otherwise names the offending tree, vertex or edge.
  std::string reason;

  explicit operator bool() const { return ok; }
};

/**
 * Accepts iff every tree is a tree of g containing all terminals, no two
 * trees share a non-terminal vertex, and no two trees share an edge.
 */
CheckResult check(const Graph& g, const STreeSet& set);

/// delta(G) - 1 when two minimum-degree vertices are adjacent, which bounds
/// the number of internally edge-disjoint S-trees for some 3-set S.
std::optional<int> upper_bound_lemma1(const Graph& g);

/// Guaranteed tree count from vertex connectivity: for kappa = 4k + r with
/// 0 <= r < 4, returns 3k + ceil(r / 2). Throws std::domain_error if kappa < 1.
int lower_bound_lemma2(int kappa);

enum class Family { burnt_pancake, godan };

/// "BP" or "EA".
std::string family_name(Family family);
/// Accepts "BP"/"EA" in any case; std::nullopt otherwise.
std::optional<Family> parse_family(const std::string& name);

struct CertifyOptions {
  /// Zero means exhaustive coverage of all 3-sets.
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  /// Worker threads; values below 1 are treated as 1.
  int workers = 1;
  PackingOptions packing{};
};

struct StructuralCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct TripleFailure {
  std::vector<std::string> terminals;
  std::string case_label;
  std::string reason;
};

struct Certificate {
  static constexpr int kSchemaVersion = 1;

  Family family = Family::burnt_pancake;
  int n = 0;
  int order = 0;
  std::size_t size = 0;
  std::vector<StructuralCheck> structure;
  int kappa = 0;
  int kappa_expected = 0;

  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t total_triples = 0;
  std::uint64_t covered_triples = 0;
  /// Constructed tree count required for every covered triple.
  int trees_per_triple = 0;
  std::map<std::string, std::uint64_t> case_tallies;
  std::vector<TripleFailure> failures;

  std::optional<int> upper_bound;
  int lower_bound = 0;
  /// Set only when every covered triple produced upper_bound trees.
  std::optional<int> claimed_kappa3;

  bool passed() const;
  /// Deterministic JSON rendering (no timings, stable key order).
  std::string to_json() const;
};

/**
 * Builds the family at n, checks its structural formulas and connectivity,
 * runs the constructive builder plus check() on each covered triple and
 * aggregates the outcome. Sampling is seeded and stratified by case label.
 * Throws std::domain_error when the family cannot be built at n.
 */
Certificate certify_family(Family family, int n, const CertifyOptions& options = {});

/// The sampled (or, with count 0, all) triples certify_family would cover,
/// in processing order. Exposed for coverage tests.
std::vector<Triple> certification_triples(Family family, int n,
                                          const CertifyOptions& options);

}  // namespace cayley
