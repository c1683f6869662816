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

#include "cayley_steiner/verify.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <variant>

#include <json.hpp>

#include "cayley_steiner/flows.hpp"

namespace cayley {

namespace {

std::string edge_text(const Graph& g, const Edge& e) {
  return "(" + g.label(e.u) + ", " + g.label(e.v) + ")";
}

}  // namespace

CheckResult check(const Graph& g, const STreeSet& set) {
  const Triple& s = set.terminals;
  for (Vertex v : s) {
    if (!g.contains(v)) return {false, "terminal " + std::to_string(v) + " is not a vertex"};
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    return {false, "terminals are not distinct"};
  }
  auto is_terminal = [&](Vertex v) { return v == s[0] || v == s[1] || v == s[2]; };

  std::map<Vertex, std::size_t> vertex_owner;
  std::map<Edge, std::size_t> edge_owner;
  for (std::size_t t = 0; t < set.trees.size(); ++t) {
    const auto& tree = set.trees[t];
    const std::string name = "tree " + std::to_string(t);
    std::set<Vertex> vertices;
    std::set<Edge> edges;
    for (const Edge& e : tree) {
      if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) {
        return {false, name + " uses a non-edge {" + std::to_string(e.u) + ", " +
                           std::to_string(e.v) + "}"};
      }
      if (!edges.insert(Edge(e.u, e.v)).second) {
        return {false, name + " repeats edge " + edge_text(g, e)};
      }
      vertices.insert(e.u);
      vertices.insert(e.v);
    }
    for (Vertex v : s) {
      if (!vertices.count(v)) return {false, name + " misses terminal " + g.label(v)};
    }
    if (edges.size() + 1 != vertices.size()) {
      return {false, name + " is not a tree (" + std::to_string(vertices.size()) +
                         " vertices, " + std::to_string(edges.size()) + " edges)"};
    }
    // With |E| = |V| - 1, connectivity is equivalent to acyclicity.
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::set<Vertex> seen{s[0]};
    std::vector<Vertex> stack{s[0]};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != vertices.size()) return {false, name + " is disconnected"};

    for (Vertex v : vertices) {
      if (is_terminal(v)) continue;
      const auto [it, fresh] = vertex_owner.emplace(v, t);
      if (!fresh) {
        return {false, "trees " + std::to_string(it->second) + " and " +
                           std::to_string(t) + " share vertex " + g.label(v)};
      }
    }
    for (const Edge& e : edges) {
      const auto [it, fresh] = edge_owner.emplace(e, t);
      if (!fresh) {
        return {false, "trees " + std::to_string(it->second) + " and " +
                           std::to_string(t) + " share edge " + edge_text(g, e)};
      }
    }
  }
  return {};
}

std::optional<int> upper_bound_lemma1(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int delta = g.min_degree();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != delta) continue;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) == delta) return delta - 1;
    }
  }
  return std::nullopt;
}

int lower_bound_lemma2(int kappa) {
  if (kappa < 1) throw std::domain_error("connectivity must be at least 1");
  const int k = kappa / 4;
  const int r = kappa % 4;
  return 3 * k + (r + 1) / 2;
}

std::string family_name(Family family) {
  return family == Family::burnt_pancake ? "BP" : "EA";
}

std::optional<Family> parse_family(const std::string& name) {
  std::string upper = name;
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "BP") return Family::burnt_pancake;
  if (upper == "EA") return Family::godan;
  return std::nullopt;
}

bool Certificate::passed() const {
  if (!failures.empty() || kappa != kappa_expected) return false;
  for (const StructuralCheck& c : structure) {
    if (!c.passed) return false;
  }
  return claimed_kappa3.has_value();
}

std::string Certificate::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "cayley-steiner/certificate/v" + std::to_string(kSchemaVersion);
  j["family"] = family_name(family);
  j["n"] = n;
  j["passed"] = passed();
  j["graph"] = {{"order", order}, {"size", size}};
  ordered_json checks = ordered_json::array();
  for (const StructuralCheck& c : structure) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed}});
  }
  j["structure"] = std::move(checks);
  j["connectivity"] = {{"kappa", kappa}, {"expected", kappa_expected}};
  ordered_json coverage = {{"mode", exhaustive ? "exhaustive" : "sample"},
                           {"total_triples", total_triples},
                           {"covered_triples", covered_triples}};
  if (!exhaustive) coverage["seed"] = seed;
  j["coverage"] = std::move(coverage);
  j["trees_per_triple"] = trees_per_triple;
  ordered_json tallies = ordered_json::object();
  for (const auto& [label, count] : case_tallies) tallies[label] = count;
  j["case_tallies"] = std::move(tallies);
  ordered_json fails = ordered_json::array();
  for (const TripleFailure& f : failures) {
    fails.push_back({{"S", f.terminals}, {"case", f.case_label}, {"reason", f.reason}});
  }
  j["failures"] = std::move(fails);
  ordered_json bounds;
  bounds["upper"] = upper_bound ? ordered_json(*upper_bound) : ordered_json(nullptr);
  bounds["lower_from_kappa"] = lower_bound;
  j["bounds"] = std::move(bounds);
  j["kappa3"] = claimed_kappa3 ? ordered_json(*claimed_kappa3) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

namespace {

// Holds whichever network the family needs.
struct Network {
  Family family;
  int n;
  std::unique_ptr<BurntPancakeNetwork> bp;
  std::unique_ptr<GodanNetwork> ea;

  Network(Family f, int n_) : family(f), n(n_) {
    if (f == Family::burnt_pancake) {
      bp = std::make_unique<BurntPancakeNetwork>(n_);
    } else {
      ea = std::make_unique<GodanNetwork>(n_);
    }
  }
  const Graph& graph() const { return bp ? bp->graph() : ea->graph(); }
  std::vector<std::string> labels() const {
    return bp ? bp_case_labels(n) : ea_case_labels(n);
  }
  std::string classify(const Triple& s) const {
    return bp ? classify_bp(*bp, s) : classify_ea(*ea, s);
  }
  STreeSet build(const Triple& s, const PackingOptions& packing) const {
    return bp ? bp_trees(*bp, s) : ea_trees(*ea, s, packing);
  }
};

constexpr std::uint64_t kMaxExhaustiveTriples = 50'000'000;

std::uint64_t choose3(std::uint64_t m) {
  return m < 3 ? 0 : m * (m - 1) / 2 * (m - 2) / 3;
}

// Uniform draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Triple> all_triples(int order) {
  std::vector<Triple> out;
  out.reserve(choose3(order));
  for (Vertex a = 0; a < order; ++a) {
    for (Vertex b = a + 1; b < order; ++b) {
      for (Vertex c = b + 1; c < order; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// Rejection sampling into equal per-label quotas. Strata that stay short
// after the attempt cap are topped up from any label.
std::vector<Triple> stratified_sample(const Network& net, std::uint64_t count,
                                      std::uint64_t seed) {
  const int order = net.graph().order();
  const std::vector<std::string> labels = net.labels();
  std::map<std::string, std::uint64_t> quota;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    quota[labels[i]] = count / labels.size() + (i < count % labels.size() ? 1 : 0);
  }
  std::mt19937_64 rng(seed);
  std::set<Triple> chosen;
  auto draw = [&]() {
    Triple t{};
    do {
      for (Vertex& v : t) v = static_cast<Vertex>(uniform_below(rng, order));
    } while (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]);
    std::sort(t.begin(), t.end());
    return t;
  };
  const std::uint64_t cap = std::max<std::uint64_t>(count * 1000, 1'000'000);
  for (std::uint64_t attempt = 0; attempt < cap && chosen.size() < count; ++attempt) {
    const Triple t = draw();
    if (chosen.count(t)) continue;
    auto& left = quota[net.classify(t)];
    if (left == 0) continue;
    --left;
    chosen.insert(t);
  }
  for (std::uint64_t attempt = 0; attempt < cap && chosen.size() < count; ++attempt) {
    chosen.insert(draw());
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<Triple> triples_for(const Network& net, const CertifyOptions& options) {
  const std::uint64_t total = choose3(net.graph().order());
  if (options.sample == 0 || options.sample >= total) {
    if (total > kMaxExhaustiveTriples) {
      throw std::domain_error("exhaustive coverage of " + std::to_string(total) +
                              " triples is not supported; use sampling");
    }
    return all_triples(net.graph().order());
  }
  return stratified_sample(net, options.sample, options.seed);
}

void add_check(Certificate& cert, std::string name, const std::string& expected,
               const std::string& actual) {
  cert.structure.push_back({std::move(name), expected, actual, expected == actual});
}

template <typename T>
std::string str(T value) {
  return std::to_string(value);
}

void bp_structure(const BurntPancakeNetwork& bp, Certificate& cert) {
  const int n = bp.n();
  const Graph& g = bp.graph();
  const std::uint64_t nf = factorial(n);
  add_check(cert, "order", str(nf << n), str(g.order()));
  add_check(cert, "size", str(n * nf << (n - 1)), str(g.size()));
  add_check(cert, "degree", str(n) + ".." + str(n),
            str(g.min_degree()) + ".." + str(g.max_degree()));

  const ClusterDecomposition& dec = bp.clusters();
  const std::uint64_t cluster_size = factorial(n - 1) << (n - 1);
  int bad_clusters = 0;
  for (int c = 0; c < dec.cluster_count(); ++c) {
    const auto members = dec.members[c];
    const Subgraph sub = induced_subgraph(g, members);
    if (members.size() != cluster_size || !sub.graph.is_connected() ||
        sub.graph.min_degree() != n - 1 || sub.graph.max_degree() != n - 1) {
      ++bad_clusters;
    }
  }
  add_check(cert, "clusters", str(2 * n), str(dec.cluster_count()));
  add_check(cert, "clusters with wrong size, degree or connectivity", "0",
            str(bad_clusters));

  const std::uint64_t per_pair = n >= 2 ? factorial(n - 2) << (n - 2) : 0;
  int bad_pairs = 0;
  for (int i = 0; i < dec.cluster_count(); ++i) {
    for (int j = 0; j < dec.cluster_count(); ++j) {
      if (i == j) continue;
      const ClusterId a = ClusterId::from_index(i);
      const ClusterId b = ClusterId::from_index(j);
      const std::uint64_t expected = a == b.opposite() ? 0 : per_pair;
      if (cross_edge_set(g, dec, a, b).size() != expected) ++bad_pairs;
    }
  }
  add_check(cert, "cluster pairs violating the cross-edge count", "0", str(bad_pairs));

  int bad_out = 0;
  int bad_spread = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    int outside = 0;
    for (Vertex w : g.neighbors(x)) outside += bp.cluster_of(w) != bp.cluster_of(x);
    if (outside != 1 || bp.cluster_of(bp.out_neighbour(x)) == bp.cluster_of(x)) ++bad_out;
    // Out-neighbours of x and its in-cluster neighbours hit n distinct
    // clusters, none of them x's own.
    std::set<ClusterId> hit;
    bool own = false;
    auto visit = [&](Vertex v) {
      const ClusterId c = bp.cluster_of(bp.out_neighbour(v));
      own = own || c == bp.cluster_of(x);
      hit.insert(c);
    };
    visit(x);
    for (Vertex w : g.neighbors(x)) {
      if (bp.cluster_of(w) == bp.cluster_of(x)) visit(w);
    }
    if (own || static_cast<int>(hit.size()) != n) ++bad_spread;
  }
  add_check(cert, "vertices without a unique out-neighbour", "0", str(bad_out));
  add_check(cert, "vertices violating the out-neighbour spread", "0", str(bad_spread));

  if (n <= 4) {
    int bad_punctured = 0;
    for (int c = 0; c < dec.cluster_count(); ++c) {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (bp.cluster_of(v).index() != c) keep.push_back(v);
      }
      if (vertex_connectivity(induced_subgraph(g, keep).graph) != n - 1) ++bad_punctured;
    }
    add_check(cert, "punctured graphs with connectivity other than n - 1", "0",
              str(bad_punctured));
  }
}

void ea_structure(const GodanNetwork& ea, Certificate& cert) {
  const int n = ea.n();
  const Graph& g = ea.graph();
  const std::uint64_t nf = factorial(n);
  add_check(cert, "order", str(nf), str(g.order()));
  add_check(cert, "size", str(n * nf / 2), str(g.size()));
  add_check(cert, "degree", str(n) + ".." + str(n),
            str(g.min_degree()) + ".." + str(g.max_degree()));

  std::vector<Edge> cross;
  std::set<Edge> matching;
  for (Vertex v = 0; v < g.order(); ++v) {
    matching.insert(Edge(v, ea.out_neighbour(v)));
    for (Vertex w : g.neighbors(v)) {
      if (v < w && ea.part_of(v) != ea.part_of(w)) cross.emplace_back(v, w);
    }
  }
  const bool matching_ok =
      std::equal(cross.begin(), cross.end(), matching.begin(), matching.end());
  add_check(cert, "cross edges form the matching u ~ u(12)", "true",
            matching_ok ? "true" : "false");

  const Graph an = build_alternating_network(n);
  std::set<std::pair<std::string, std::string>> an_edges;
  for (const Edge& e : an.edges()) an_edges.emplace(an.label(e.u), an.label(e.v));
  const Graph& even = ea.part_graph(1).graph;
  std::set<std::pair<std::string, std::string>> even_edges;
  for (const Edge& e : even.edges()) even_edges.emplace(even.label(e.u), even.label(e.v));
  add_check(cert, "even part equals AN_n", "true", even_edges == an_edges ? "true" : "false");

  const Subgraph& odd = ea.part_graph(2);
  const Subgraph& even_sub = ea.part_graph(1);
  bool iso = odd.graph.size() == even_sub.graph.size();
  for (const Edge& e : odd.graph.edges()) {
    const Vertex a = even_sub.from_host[ea.out_neighbour(odd.to_host[e.u])];
    const Vertex b = even_sub.from_host[ea.out_neighbour(odd.to_host[e.v])];
    if (a < 0 || b < 0 || !even_sub.graph.adjacent(a, b)) iso = false;
  }
  add_check(cert, "odd part maps onto AN_n via u -> u(12)", "true", iso ? "true" : "false");

  if (n <= 5) {
    add_check(cert, "connectivity of AN_n", str(n - 1), str(vertex_connectivity(an)));
  }
}

struct TripleOutcome {
  std::string label;
  std::size_t trees = 0;
  std::string error;
};

TripleOutcome certify_triple(const Network& net, const Triple& s,
                             const PackingOptions& packing, int expected) {
  TripleOutcome out;
  try {
    out.label = net.classify(s);
    const STreeSet set = net.build(s, packing);
    out.trees = set.trees.size();
    if (set.case_label != out.label) {
      out.error = "builder recorded case " + set.case_label;
    } else if (static_cast<int>(out.trees) != expected) {
      out.error = "built " + std::to_string(out.trees) + " trees, expected " +
                  std::to_string(expected);
    } else if (const CheckResult r = check(net.graph(), set); !r) {
      out.error = r.reason;
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<Triple> certification_triples(Family family, int n,
                                          const CertifyOptions& options) {
  const Network net(family, n);
  return triples_for(net, options);
}

Certificate certify_family(Family family, int n, const CertifyOptions& options) {
  const Network net(family, n);
  const Graph& g = net.graph();
  const std::vector<Triple> triples = triples_for(net, options);
  Certificate cert;
  cert.family = family;
  cert.n = n;
  cert.order = g.order();
  cert.size = g.size();
  if (net.bp) {
    bp_structure(*net.bp, cert);
  } else {
    ea_structure(*net.ea, cert);
  }
  cert.kappa = vertex_connectivity(g);
  cert.kappa_expected = n;
  cert.upper_bound = upper_bound_lemma1(g);
  cert.lower_bound = lower_bound_lemma2(cert.kappa);
  cert.trees_per_triple = n - 1;

  cert.total_triples = choose3(g.order());
  cert.covered_triples = triples.size();
  cert.exhaustive = triples.size() == cert.total_triples;
  cert.seed = cert.exhaustive ? 0 : options.seed;

  std::vector<TripleOutcome> outcomes(triples.size());
  const int workers = std::max(1, options.workers);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      outcomes[i] = certify_triple(net, triples[i], options.packing, cert.trees_per_triple);
    }
  };
  if (workers == 1 || triples.size() < 2) {
    run(0, triples.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (triples.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < triples.size(); begin += chunk) {
      pool.emplace_back(run, begin, std::min(triples.size(), begin + chunk));
    }
    for (std::thread& t : pool) t.join();
  }

  for (const std::string& label : net.labels()) cert.case_tallies[label] = 0;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const TripleOutcome& o = outcomes[i];
    if (!o.label.empty()) ++cert.case_tallies[o.label];
    if (!o.error.empty()) {
      TripleFailure f;
      for (Vertex v : triples[i]) f.terminals.push_back(g.label(v));
      f.case_label = o.label;
      f.reason = o.error;
      cert.failures.push_back(std::move(f));
    }
  }
  if (cert.failures.empty() && !triples.empty() && cert.upper_bound &&
      *cert.upper_bound == cert.trees_per_triple) {
    cert.claimed_kappa3 = cert.trees_per_triple;
  }
  return cert;
}

}  // namespace cayley
