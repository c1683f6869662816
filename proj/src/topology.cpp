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

#include "cayley_steiner/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cayley {

namespace {

void dedupe(std::vector<Vertex>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

// The builders double as a self-check of the degree and size formulas.
void expect_shape(const Graph& g, std::uint64_t order, int degree,
                  const char* family) {
  if (static_cast<std::uint64_t>(g.order()) != order ||
      g.min_degree() != degree || g.max_degree() != degree ||
      2 * g.size() != static_cast<std::size_t>(order) * degree) {
    throw std::logic_error(std::string(family) +
                           ": built graph violates its order/degree formula");
  }
}

Graph build_cayley(int n, const GeneratorSet& gens, bool even_only) {
  const std::uint64_t total = factorial(n);
  std::vector<Vertex> local(total, -1);
  std::vector<Permutation> vertices;
  for (std::uint64_t r = 0; r < total; ++r) {
    Permutation p = unrank_permutation(n, r);
    if (even_only && parity(p) != Parity::even) continue;
    local[r] = static_cast<Vertex>(vertices.size());
    vertices.push_back(std::move(p));
  }
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (const Permutation& s : gens.elements()) {
      const Vertex w = local[rank(compose(vertices[v], s))];
      if (w < 0) throw std::logic_error("generator leaves the vertex set");
      adjacency[v].push_back(w);
    }
    dedupe(adjacency[v]);
    labels.push_back(vertices[v].to_string());
  }
  return Graph(std::move(adjacency), std::move(labels));
}

}  // namespace

Graph build_burnt_pancake(int n) {
  if (n < 2 || n > kMaxBurntPancakeN) {
    throw std::domain_error("burnt pancake graph needs 2 <= n <= " +
                            std::to_string(kMaxBurntPancakeN));
  }
  const std::uint64_t order = factorial(n) << n;
  std::vector<std::vector<Vertex>> adjacency(order);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::uint64_t r = 0; r < order; ++r) {
    const SignedPermutation x = unrank_signed(n, r);
    for (int i = 1; i <= n; ++i) {
      adjacency[r].push_back(static_cast<Vertex>(rank(x.prefix_reversal(i))));
    }
    dedupe(adjacency[r]);
    labels.push_back(x.to_string());
  }
  Graph g(std::move(adjacency), std::move(labels));
  expect_shape(g, order, n, "BP_n");
  return g;
}

Graph build_alternating_network(int n) {
  if (n < 3 || n > kMaxGodanN) {
    throw std::domain_error("alternating group network needs 3 <= n <= " +
                            std::to_string(kMaxGodanN));
  }
  Graph g = build_cayley(n, an_generators(n), /*even_only=*/true);
  expect_shape(g, factorial(n) / 2, n - 1, "AN_n");
  return g;
}

Graph build_godan(int n) {
  if (n < 3 || n > kMaxGodanN) {
    throw std::domain_error("godan graph needs 3 <= n <= " +
                            std::to_string(kMaxGodanN));
  }
  Graph g = build_cayley(n, ea_generators(n), /*even_only=*/false);
  expect_shape(g, factorial(n), n, "EA_n");
  return g;
}

ClusterDecomposition cluster_decomposition(const Graph& g, int n) {
  if (n < 2 || static_cast<std::uint64_t>(g.order()) != (factorial(n) << n)) {
    throw std::domain_error("graph is not BP_n for the given n");
  }
  ClusterDecomposition dec;
  dec.n = n;
  dec.cluster_of.resize(g.order());
  dec.members.assign(2 * n, {});
  for (Vertex v = 0; v < g.order(); ++v) {
    const ClusterId c{unrank_signed(n, v).last()};
    dec.cluster_of[v] = c;
    dec.members[c.index()].push_back(v);
  }
  return dec;
}

SignedPermutation out_neighbour_bp(const SignedPermutation& x) {
  return x.prefix_reversal(x.size());
}

Permutation out_neighbour_ea(const Permutation& u) {
  return compose(u, Permutation::from_cycles(u.size(), "(1 2)"));
}

std::vector<Edge> cross_edge_set(const Graph& g, const ClusterDecomposition& dec,
                                 ClusterId i, ClusterId j) {
  if (i == j) throw std::domain_error("cross_edge_set needs distinct clusters");
  std::vector<Edge> out;
  for (Vertex v : dec.members_of(i)) {
    for (Vertex w : g.neighbors(v)) {
      if (dec.cluster_of[w] == j) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation cluster_relabel(const SignedPermutation& x) {
  const int n = x.size();
  if (n < 3) throw std::domain_error("cluster_relabel needs n >= 3");
  const int dropped = std::abs(x.last());
  std::vector<int> entries(x.entries().begin(), x.entries().end() - 1);
  for (int& v : entries) {
    const int magnitude = std::abs(v);
    const int mapped = magnitude > dropped ? magnitude - 1 : magnitude;
    v = v < 0 ? -mapped : mapped;
  }
  return SignedPermutation(std::move(entries));
}

SignedPermutation cluster_embed(const SignedPermutation& y, ClusterId j) {
  const int n = y.size() + 1;
  const int inserted = std::abs(j.value);
  if (inserted < 1 || inserted > n) {
    throw std::domain_error("cluster symbol out of range for embed");
  }
  std::vector<int> entries(y.entries().begin(), y.entries().end());
  for (int& v : entries) {
    const int magnitude = std::abs(v);
    const int mapped = magnitude >= inserted ? magnitude + 1 : magnitude;
    v = v < 0 ? -mapped : mapped;
  }
  entries.push_back(j.value);
  return SignedPermutation(std::move(entries));
}

Graph punctured_bp(int n, ClusterId j) {
  Graph full = build_burnt_pancake(n);
  if (j.value == 0 || std::abs(j.value) > n) {
    throw std::domain_error("cluster symbol out of range");
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < full.order(); ++v) {
    if (unrank_signed(n, v).last() != j.value) keep.push_back(v);
  }
  return induced_subgraph(full, keep).graph;
}

BurntPancakeNetwork::BurntPancakeNetwork(int n)
    : n_(n),
      graph_(build_burnt_pancake(n)),
      clusters_(cluster_decomposition(graph_, n)) {
  const int order = graph_.order();
  out_neighbour_.resize(order);
  std::vector<SignedPermutation> labels;
  labels.reserve(order);
  for (Vertex v = 0; v < order; ++v) {
    labels.push_back(unrank_signed(n, v));
    out_neighbour_[v] =
        static_cast<Vertex>(rank(out_neighbour_bp(labels.back())));
  }
  std::vector<Vertex> by_label(order);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(), [&](Vertex a, Vertex b) {
    return std::lexicographical_compare(
        labels[a].entries().begin(), labels[a].entries().end(),
        labels[b].entries().begin(), labels[b].entries().end());
  });
  lex_position_.resize(order);
  for (int i = 0; i < order; ++i) lex_position_[by_label[i]] = i;

  outside_.assign(2 * n, VertexMask(order, 1));
  inside_.assign(2 * n, VertexMask(order, 0));
  for (Vertex v = 0; v < order; ++v) {
    const int c = cluster_of(v).index();
    outside_[c][v] = 0;
    inside_[c][v] = 1;
  }
  if (n > 2) {
    lower_ = std::make_unique<BurntPancakeNetwork>(n - 1);
    to_lower_.resize(order);
    from_lower_.assign(2 * n, std::vector<Vertex>(lower_->graph().order()));
    for (Vertex v = 0; v < order; ++v) {
      const Vertex w = lower_->vertex_of(cluster_relabel(labels[v]));
      to_lower_[v] = w;
      from_lower_[cluster_of(v).index()][w] = v;
    }
  }
}

SignedPermutation BurntPancakeNetwork::label(Vertex v) const {
  return unrank_signed(n_, static_cast<std::uint64_t>(v));
}

Vertex BurntPancakeNetwork::vertex_of(const SignedPermutation& x) const {
  if (x.size() != n_) throw std::domain_error("label has the wrong length");
  return static_cast<Vertex>(rank(x));
}

Vertex BurntPancakeNetwork::relabel_to_lower(Vertex v) const {
  if (!lower_) throw std::domain_error("BP_2 has no lower level");
  return to_lower_[v];
}

Vertex BurntPancakeNetwork::embed_from_lower(Vertex lower_vertex,
                                             ClusterId c) const {
  if (!lower_) throw std::domain_error("BP_2 has no lower level");
  return from_lower_[c.index()][lower_vertex];
}

GodanNetwork::GodanNetwork(int n) : n_(n), graph_(build_godan(n)) {
  const int order = graph_.order();
  part_.resize(order);
  out_neighbour_.resize(order);
  for (Vertex v = 0; v < order; ++v) {
    const Permutation p = unrank_permutation(n, v);
    part_[v] = parity(p) == Parity::even ? 1 : 2;
    out_neighbour_[v] = static_cast<Vertex>(rank(out_neighbour_ea(p)));
    members_[part_[v] - 1].push_back(v);
  }
  for (int p = 0; p < 2; ++p) {
    outside_[p].assign(order, 1);
    for (Vertex v : members_[p]) outside_[p][v] = 0;
    parts_[p] = induced_subgraph(graph_, members_[p]);
  }
}

Permutation GodanNetwork::label(Vertex v) const {
  return unrank_permutation(n_, static_cast<std::uint64_t>(v));
}

Vertex GodanNetwork::vertex_of(const Permutation& p) const {
  if (p.size() != n_) throw std::domain_error("label has the wrong length");
  return static_cast<Vertex>(rank(p));
}

}  // namespace cayley
