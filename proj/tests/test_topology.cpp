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

#include <cstdlib>
#include <set>
#include <stdexcept>

#include <catch_amalgamated.hpp>

#include "cayley_steiner/flows.hpp"
#include "cayley_steiner/topology.hpp"

using namespace cayley;

TEST_CASE("burnt pancake sizes") {
  const Graph bp2 = build_burnt_pancake(2);
  CHECK(bp2.order() == 8);
  CHECK(bp2.size() == 8);
  const Graph bp3 = build_burnt_pancake(3);
  CHECK(bp3.order() == 48);
  CHECK(bp3.size() == 72);
  for (int n = 2; n <= 5; ++n) {
    const Graph g = build_burnt_pancake(n);
    const std::uint64_t nf = factorial(n);
    REQUIRE(static_cast<std::uint64_t>(g.order()) == (nf << n));
    REQUIRE(g.size() == n * nf << (n - 1));
    REQUIRE(g.min_degree() == n);
    REQUIRE(g.max_degree() == n);
  }
  CHECK_THROWS_AS(build_burnt_pancake(1), std::domain_error);
}

TEST_CASE("BP_2 is a single 8-cycle") {
  const Graph g = build_burnt_pancake(2);
  CHECK(g.is_regular());
  CHECK(g.min_degree() == 2);
  CHECK(g.is_connected());
  // Walk the cycle: it must return to the start after exactly 8 steps.
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  int steps = 1;
  while (cur != 0) {
    const Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  CHECK(steps == 8);
}

TEST_CASE("burnt pancake adjacency is prefix reversal") {
  const Graph g = build_burnt_pancake(3);
  for (Vertex v = 0; v < g.order(); ++v) {
    const SignedPermutation x = unrank_signed(3, v);
    CHECK(g.label(v) == x.to_string());
    for (int i = 1; i <= 3; ++i) {
      REQUIRE(g.adjacent(v, static_cast<Vertex>(rank(x.prefix_reversal(i)))));
    }
  }
}

TEST_CASE("alternating network and godan graph sizes") {
  const Graph an3 = build_alternating_network(3);
  CHECK(an3.order() == 3);
  CHECK(an3.size() == 3);
  const Graph ea3 = build_godan(3);
  CHECK(ea3.order() == 6);
  CHECK(ea3.size() == 9);
  const Graph ea4 = build_godan(4);
  CHECK(ea4.order() == 24);
  CHECK(ea4.size() == 48);
  for (int n = 3; n <= 6; ++n) {
    const Graph an = build_alternating_network(n);
    REQUIRE(static_cast<std::uint64_t>(an.order()) == factorial(n) / 2);
    REQUIRE(an.size() == factorial(n) * (n - 1) / 4);
    REQUIRE(an.is_regular());
    const Graph ea = build_godan(n);
    REQUIRE(ea.size() == n * factorial(n) / 2);
    REQUIRE(ea.min_degree() == n);
  }
  CHECK_THROWS_AS(build_godan(2), std::domain_error);
  CHECK_THROWS_AS(build_alternating_network(2), std::domain_error);
}

TEST_CASE("godan adjacency follows u = v s") {
  const int n = 4;
  const Graph g = build_godan(n);
  const GeneratorSet gens = ea_generators(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::set<Vertex> expected;
    for (const Permutation& s : gens.elements()) {
      expected.insert(static_cast<Vertex>(rank(compose(unrank_permutation(n, v), s))));
    }
    const auto nb = g.neighbors(v);
    REQUIRE(std::set<Vertex>(nb.begin(), nb.end()) == expected);
  }
}

TEST_CASE("cluster decomposition") {
  const Graph g = build_burnt_pancake(3);
  const ClusterDecomposition dec = cluster_decomposition(g, 3);
  CHECK(dec.cluster_count() == 6);
  for (const auto& members : dec.members) CHECK(members.size() == 8);
  CHECK(dec.cluster_of[rank(SignedPermutation::parse("1,2,3"))] == ClusterId{3});
  CHECK(dec.cluster_of[rank(SignedPermutation::parse("-3,-2,-1"))] == ClusterId{-1});
  for (int c = 0; c < dec.cluster_count(); ++c) {
    const Subgraph sub = induced_subgraph(g, dec.members[c]);
    CHECK(sub.graph.is_connected());
    CHECK(sub.graph.min_degree() == 2);
    CHECK(sub.graph.max_degree() == 2);
  }
}

TEST_CASE("cluster ordering") {
  CHECK(ClusterId{1}.index() == 0);
  CHECK(ClusterId{-1}.index() == 1);
  CHECK(ClusterId{2}.index() == 2);
  CHECK(ClusterId{-3}.index() == 5);
  for (int i = 0; i < 10; ++i) CHECK(ClusterId::from_index(i).index() == i);
  CHECK(ClusterId{1} < ClusterId{-1});
  CHECK(ClusterId{-1} < ClusterId{2});
  CHECK(ClusterId{2}.opposite() == ClusterId{-2});
}

TEST_CASE("burnt pancake out-neighbour") {
  const SignedPermutation x = SignedPermutation::parse("1,2,3");
  CHECK(out_neighbour_bp(x) == SignedPermutation::parse("-3,-2,-1"));
  const BurntPancakeNetwork bp(3);
  for (Vertex v = 0; v < bp.graph().order(); ++v) {
    const SignedPermutation label = bp.label(v);
    REQUIRE(out_neighbour_bp(out_neighbour_bp(label)) == label);
    REQUIRE(bp.cluster_of(bp.out_neighbour(v)) == ClusterId{-label.at(1)});
    int outside = 0;
    for (Vertex w : bp.graph().neighbors(v)) outside += bp.cluster_of(w) != bp.cluster_of(v);
    REQUIRE(outside == 1);
  }
}

TEST_CASE("godan out-neighbour is the perfect matching") {
  CHECK(out_neighbour_ea(Permutation::identity(4)) == Permutation::parse("2,1,3,4"));
  const GodanNetwork ea(4);
  const Graph& g = ea.graph();
  std::set<Edge> cross;
  for (const Edge& e : g.edges()) {
    if (ea.part_of(e.u) != ea.part_of(e.v)) cross.insert(e);
  }
  std::set<Edge> matching;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Permutation u = ea.label(v);
    REQUIRE(out_neighbour_ea(out_neighbour_ea(u)) == u);
    REQUIRE(parity(out_neighbour_ea(u)) != parity(u));
    matching.emplace(v, static_cast<Vertex>(rank(out_neighbour_ea(u))));
  }
  CHECK(cross.size() == 12);
  CHECK(cross == matching);
}

TEST_CASE("cross edge counts match a label-count oracle") {
  // Oracle: x^n sits in cluster -x_1, so the edges between clusters i and j
  // are the vertices with last symbol i and first symbol -j.
  for (int n = 3; n <= 4; ++n) {
    const Graph g = build_burnt_pancake(n);
    const ClusterDecomposition dec = cluster_decomposition(g, n);
    for (int a = 0; a < 2 * n; ++a) {
      for (int b = 0; b < 2 * n; ++b) {
        if (a == b) continue;
        const ClusterId i = ClusterId::from_index(a);
        const ClusterId j = ClusterId::from_index(b);
        std::size_t oracle = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
          const SignedPermutation x = unrank_signed(n, v);
          oracle += x.last() == i.value && x.at(1) == -j.value;
        }
        const std::size_t formula =
            i == j.opposite() ? 0 : factorial(n - 2) << (n - 2);
        REQUIRE(cross_edge_set(g, dec, i, j).size() == oracle);
        REQUIRE(oracle == formula);
      }
    }
  }
  const Graph g3 = build_burnt_pancake(3);
  const ClusterDecomposition d3 = cluster_decomposition(g3, 3);
  CHECK(cross_edge_set(g3, d3, ClusterId{1}, ClusterId{2}).size() == 2);
  CHECK(cross_edge_set(g3, d3, ClusterId{1}, ClusterId{-1}).empty());
  const Graph g4 = build_burnt_pancake(4);
  CHECK(cross_edge_set(g4, cluster_decomposition(g4, 4), ClusterId{2}, ClusterId{3}).size() == 8);
  CHECK_THROWS_AS(cross_edge_set(g3, d3, ClusterId{1}, ClusterId{1}), std::domain_error);
}

TEST_CASE("cluster relabel examples") {
  CHECK(cluster_relabel(SignedPermutation::parse("1,2,3")) == SignedPermutation::parse("1,2"));
  CHECK(cluster_relabel(SignedPermutation::parse("-3,1,2")) == SignedPermutation::parse("-2,1"));
  CHECK(cluster_embed(SignedPermutation::parse("-2,1"), ClusterId{2}) ==
        SignedPermutation::parse("-3,1,2"));
}

TEST_CASE("cluster relabel is an isomorphism onto BP_{n-1}") {
  for (int n = 3; n <= 4; ++n) {
    const Graph g = build_burnt_pancake(n);
    const Graph lower = build_burnt_pancake(n - 1);
    const ClusterDecomposition dec = cluster_decomposition(g, n);
    for (int c = 0; c < dec.cluster_count(); ++c) {
      std::set<Edge> mapped;
      for (Vertex v : dec.members[c]) {
        const Vertex lv = static_cast<Vertex>(rank(cluster_relabel(unrank_signed(n, v))));
        REQUIRE(cluster_embed(unrank_signed(n - 1, lv), ClusterId::from_index(c)) ==
                unrank_signed(n, v));
        for (Vertex w : g.neighbors(v)) {
          if (dec.cluster_of[w].index() != c) continue;
          mapped.emplace(lv, static_cast<Vertex>(rank(cluster_relabel(unrank_signed(n, w)))));
        }
      }
      const auto lower_edges = lower.edges();
      REQUIRE(mapped == std::set<Edge>(lower_edges.begin(), lower_edges.end()));
    }
  }
}

TEST_CASE("network relabel tables agree with the free functions") {
  const BurntPancakeNetwork bp(4);
  REQUIRE(bp.lower() != nullptr);
  CHECK(bp.lower()->n() == 3);
  CHECK(bp.lower()->lower()->lower() == nullptr);
  for (Vertex v = 0; v < bp.graph().order(); ++v) {
    const Vertex lv = bp.relabel_to_lower(v);
    REQUIRE(bp.lower()->label(lv) == cluster_relabel(bp.label(v)));
    REQUIRE(bp.embed_from_lower(lv, bp.cluster_of(v)) == v);
  }
}

TEST_CASE("lexicographic positions order labels") {
  const BurntPancakeNetwork bp(3);
  std::set<int> seen;
  for (Vertex a = 0; a < bp.graph().order(); ++a) {
    seen.insert(bp.lex_position(a));
    for (Vertex b = 0; b < bp.graph().order(); ++b) {
      const SignedPermutation xa = bp.label(a);
      const SignedPermutation xb = bp.label(b);
      const auto la = xa.entries();
      const auto lb = xb.entries();
      const bool less = std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
      REQUIRE(less == (bp.lex_position(a) < bp.lex_position(b)));
    }
  }
  CHECK(seen.size() == 48);
}

TEST_CASE("out-neighbour spread over closed in-cluster neighbourhoods") {
  for (int n = 2; n <= 4; ++n) {
    const BurntPancakeNetwork bp(n);
    for (Vertex x = 0; x < bp.graph().order(); ++x) {
      std::set<ClusterId> hit{bp.cluster_of(bp.out_neighbour(x))};
      for (Vertex w : bp.graph().neighbors(x)) {
        if (bp.cluster_of(w) == bp.cluster_of(x)) hit.insert(bp.cluster_of(bp.out_neighbour(w)));
      }
      REQUIRE(static_cast<int>(hit.size()) == n);
      REQUIRE(!hit.count(bp.cluster_of(x)));
    }
  }
}

TEST_CASE("punctured burnt pancake graphs") {
  CHECK(punctured_bp(3, ClusterId{-3}).order() == 40);
  for (int j : {1, -1, 2, -2}) {
    const Graph h = punctured_bp(2, ClusterId{j});
    CHECK(h.order() == 6);
    CHECK(h.size() == 5);
    CHECK(h.is_connected());
    int ends = 0;
    for (Vertex v = 0; v < h.order(); ++v) ends += h.degree(v) == 1;
    CHECK(ends == 2);
  }
  for (int j : {1, -1, 2, -2, 3, -3}) CHECK(vertex_connectivity(punctured_bp(3, ClusterId{j})) == 2);
  CHECK_THROWS_AS(punctured_bp(3, ClusterId{4}), std::domain_error);
}

TEST_CASE("godan parts") {
  for (int n = 3; n <= 5; ++n) {
    const GodanNetwork ea(n);
    const Graph an = build_alternating_network(n);
    const Subgraph& even = ea.part_graph(1);
    REQUIRE(even.graph.order() == an.order());
    std::set<std::pair<std::string, std::string>> a, b;
    for (const Edge& e : an.edges()) a.emplace(an.label(e.u), an.label(e.v));
    for (const Edge& e : even.graph.edges()) b.emplace(even.graph.label(e.u), even.graph.label(e.v));
    REQUIRE(a == b);
    // The matching map carries odd-part edges onto even-part edges.
    const Subgraph& odd = ea.part_graph(2);
    REQUIRE(odd.graph.size() == even.graph.size());
    for (const Edge& e : odd.graph.edges()) {
      const Vertex x = even.from_host[ea.out_neighbour(odd.to_host[e.u])];
      const Vertex y = even.from_host[ea.out_neighbour(odd.to_host[e.v])];
      REQUIRE(x >= 0);
      REQUIRE(y >= 0);
      REQUIRE(even.graph.adjacent(x, y));
    }
  }
}
