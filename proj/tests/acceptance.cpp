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

// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// its exact expected values and its wall-clock limit. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cayley_steiner/flows.hpp"
#include "cayley_steiner/perm.hpp"
#include "cayley_steiner/topology.hpp"
#include "cayley_steiner/trees.hpp"
#include "cayley_steiner/verify.hpp"

namespace {

using namespace cayley;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(elapsed < limit_seconds, "took " + std::to_string(elapsed) + " s, limit " +
                                           std::to_string(limit_seconds) + " s");
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title
            << " (" << std::fixed << elapsed << " s)" << out.detail.str() << std::endl;
  if (!out.ok) ++failures;
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Cluster symbol of a BP_n vertex, read straight from its label.
int last_symbol(const Graph& g, Vertex v) {
  return SignedPermutation::parse(g.label(v)).last();
}

std::map<Family, std::map<int, Certificate>> certified;

bool certificate_ok(Outcome& out, const Certificate& cert, std::uint64_t triples,
                    std::size_t trees, bool exhaustive) {
  const std::string tag = family_name(cert.family) + "_" + std::to_string(cert.n);
  out.require(cert.passed(), tag + " certificate did not pass");
  out.require(cert.failures.empty(), tag + " has " + std::to_string(cert.failures.size()) +
                                         " failing triples");
  out.require(cert.covered_triples == triples,
              tag + " covered " + std::to_string(cert.covered_triples));
  out.require(cert.exhaustive == exhaustive, tag + " coverage mode");
  out.require(cert.trees_per_triple == static_cast<int>(trees),
              tag + " trees per triple " + std::to_string(cert.trees_per_triple));
  for (const StructuralCheck& c : cert.structure) {
    out.require(c.passed, tag + " structural check '" + c.name + "'");
  }
  return out.ok;
}

}  // namespace

int main() {
  criterion(1, "BP_n order, size and regularity for n = 2..5", 10, [](Outcome& out) {
    for (int n = 2; n <= 5; ++n) {
      const Graph g = build_burnt_pancake(n);
      const std::uint64_t nf = factorial(n);
      const std::string tag = "BP_" + std::to_string(n);
      out.require(static_cast<std::uint64_t>(g.order()) == pow2(n) * nf, tag + " order");
      out.require(g.size() == n * nf * pow2(n - 1), tag + " size");
      out.require(g.min_degree() == n && g.max_degree() == n, tag + " degree");
    }
  });

  criterion(2, "cross-edge counts between clusters of BP_3 and BP_4", 10, [](Outcome& out) {
    for (int n = 3; n <= 4; ++n) {
      const Graph g = build_burnt_pancake(n);
      std::map<std::pair<int, int>, std::uint64_t> count;
      for (const Edge& e : g.edges()) {
        const int a = last_symbol(g, e.u);
        const int b = last_symbol(g, e.v);
        if (a != b) ++count[{std::min(a, b), std::max(a, b)}];
      }
      const std::uint64_t expected = factorial(n - 2) * pow2(n - 2);
      for (int a = -n; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          if (a == 0 || b == 0) continue;
          const std::uint64_t want = a == -b ? 0 : expected;
          const std::uint64_t got = count.count({a, b}) ? count[{a, b}] : 0;
          out.require(got == want, "BP_" + std::to_string(n) + " clusters " +
                                       std::to_string(a) + "," + std::to_string(b) + " have " +
                                       std::to_string(got));
        }
      }
    }
  });

  criterion(3, "vertex connectivity of BP_2..5, AN_3..5 and EA_3..5", 300, [](Outcome& out) {
    for (int n = 2; n <= 5; ++n) {
      const int k = vertex_connectivity(build_burnt_pancake(n));
      out.require(k == n, "kappa(BP_" + std::to_string(n) + ") = " + std::to_string(k));
    }
    for (int n = 3; n <= 5; ++n) {
      const int k = vertex_connectivity(build_alternating_network(n));
      out.require(k == n - 1, "kappa(AN_" + std::to_string(n) + ") = " + std::to_string(k));
    }
    for (int n = 3; n <= 5; ++n) {
      const int k = vertex_connectivity(build_godan(n));
      out.require(k == n, "kappa(EA_" + std::to_string(n) + ") = " + std::to_string(k));
    }
  });

  criterion(4, "every punctured BP_3 and BP_4 has connectivity n - 1", 300, [](Outcome& out) {
    for (int n = 3; n <= 4; ++n) {
      for (int j = -n; j <= n; ++j) {
        if (j == 0) continue;
        const int k = vertex_connectivity(punctured_bp(n, ClusterId{j}));
        out.require(k == n - 1, "BP_" + std::to_string(n) + " minus cluster " +
                                    std::to_string(j) + " has kappa " + std::to_string(k));
      }
    }
  });

  criterion(5, "out-neighbour spread over all vertices of BP_2..4", 30, [](Outcome& out) {
    for (int n = 2; n <= 4; ++n) {
      const Graph g = build_burnt_pancake(n);
      int violations = 0;
      for (Vertex x = 0; x < g.order(); ++x) {
        const SignedPermutation lx = SignedPermutation::parse(g.label(x));
        std::set<int> hit;
        bool own = false;
        // N[x] within the cluster: x and its prefix reversals of length < n.
        std::vector<SignedPermutation> closed{lx};
        for (int i = 1; i < n; ++i) closed.push_back(lx.prefix_reversal(i));
        for (const SignedPermutation& u : closed) {
          const int c = u.prefix_reversal(n).last();
          own = own || c == lx.last();
          hit.insert(c);
        }
        if (own || static_cast<int>(hit.size()) != n) ++violations;
      }
      out.require(violations == 0,
                  "BP_" + std::to_string(n) + " violations " + std::to_string(violations));
    }
  });

  criterion(6, "EA_3..5 matching and part structure", 60, [](Outcome& out) {
    for (int n = 3; n <= 5; ++n) {
      const std::string tag = "EA_" + std::to_string(n);
      const Graph g = build_godan(n);
      auto perm = [&](Vertex v) { return Permutation::parse(g.label(v)); };
      auto swapped = [](const Permutation& p) {
        std::vector<int> image(p.image().begin(), p.image().end());
        std::swap(image[0], image[1]);
        return Permutation(image);
      };
      std::set<std::pair<std::string, std::string>> even_edges;
      std::set<std::pair<std::string, std::string>> odd_edges_mapped;
      std::size_t cross = 0;
      bool matching = true;
      for (const Edge& e : g.edges()) {
        const Permutation a = perm(e.u);
        const Permutation b = perm(e.v);
        const bool ea = parity(a) == Parity::even;
        const bool eb = parity(b) == Parity::even;
        if (ea != eb) {
          ++cross;
          matching = matching && swapped(a) == b;
        } else if (ea) {
          even_edges.emplace(std::min(a.to_string(), b.to_string()),
                             std::max(a.to_string(), b.to_string()));
        } else {
          const std::string sa = swapped(a).to_string();
          const std::string sb = swapped(b).to_string();
          odd_edges_mapped.emplace(std::min(sa, sb), std::max(sa, sb));
        }
      }
      out.require(matching && cross == factorial(n) / 2, tag + " cross edges");
      const Graph an = build_alternating_network(n);
      std::set<std::pair<std::string, std::string>> an_edges;
      for (const Edge& e : an.edges()) {
        an_edges.emplace(std::min(an.label(e.u), an.label(e.v)),
                         std::max(an.label(e.u), an.label(e.v)));
      }
      out.require(even_edges == an_edges, tag + " even part differs from AN_n");
      out.require(odd_edges_mapped == an_edges, tag + " odd part does not map onto AN_n");
    }
  });

  criterion(7, "BP certification: n = 2, 3 exhaustive, n = 4 stratified sample", 17 * 60,
            [](Outcome& out) {
              CertifyOptions options;
              options.workers = workers();
              for (int n = 2; n <= 3; ++n) {
                const auto start = Clock::now();
                certified[Family::burnt_pancake][n] =
                    certify_family(Family::burnt_pancake, n, options);
                const double s = std::chrono::duration<double>(Clock::now() - start).count();
                if (n == 3) out.require(s < 120, "BP_3 took " + std::to_string(s) + " s");
              }
              certificate_ok(out, certified[Family::burnt_pancake][2], 56, 1, true);
              certificate_ok(out, certified[Family::burnt_pancake][3], 17296, 2, true);

              options.sample = 10000;
              options.seed = 7;
              const auto start = Clock::now();
              const Certificate c4 = certify_family(Family::burnt_pancake, 4, options);
              const double s = std::chrono::duration<double>(Clock::now() - start).count();
              out.require(s < 15 * 60, "BP_4 took " + std::to_string(s) + " s");
              certificate_ok(out, c4, 10000, 3, false);
              for (const std::string& label : bp_case_labels(4)) {
                const auto it = c4.case_tallies.find(label);
                out.require(it != c4.case_tallies.end() && it->second > 0,
                            "BP_4 sample misses case " + label);
              }
              certified[Family::burnt_pancake][4] = c4;
            });

  criterion(8, "EA certification: n = 3, 4 exhaustive", 300, [](Outcome& out) {
    CertifyOptions options;
    options.workers = workers();
    certified[Family::godan][3] = certify_family(Family::godan, 3, options);
    certified[Family::godan][4] = certify_family(Family::godan, 4, options);
    certificate_ok(out, certified[Family::godan][3], 20, 2, true);
    certificate_ok(out, certified[Family::godan][4], 2024, 3, true);
  });

  criterion(9, "bounds agree with the constructed counts", 10, [](Outcome& out) {
    out.require(!certified.empty(), "no certificates");
    for (const auto& [family, by_n] : certified) {
      for (const auto& [n, cert] : by_n) {
        const std::string tag = family_name(family) + "_" + std::to_string(n);
        out.require(cert.upper_bound.has_value() && *cert.upper_bound == cert.trees_per_triple,
                    tag + " upper bound");
        out.require(cert.claimed_kappa3 == cert.upper_bound, tag + " claimed kappa3");
        out.require(cert.lower_bound == lower_bound_lemma2(cert.kappa), tag + " lower bound");
        out.require(cert.lower_bound <= cert.trees_per_triple, tag + " lower bound too high");
      }
    }
  });

  criterion(10, "exact packing search cross-checks the builders", 300, [](Outcome& out) {
    std::mt19937_64 rng(2026);
    auto random_triple = [&](int order) {
      Triple s{};
      do {
        for (Vertex& v : s) v = static_cast<Vertex>(rng() % order);
      } while (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]);
      return s;
    };
    const BurntPancakeNetwork bp(3);
    const GodanNetwork ea(3);
    for (int i = 0; i < 100; ++i) {
      const Triple s = random_triple(bp.graph().order());
      const std::size_t built = bp_trees(bp, s).trees.size();
      const PackingResult r = generic_stree_packing(bp.graph(), s, static_cast<int>(built));
      out.require(r.status == PackingStatus::found && check(bp.graph(), r.trees).ok,
                  "BP_3 triple " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      const Triple s = random_triple(ea.graph().order());
      const std::size_t built = ea_trees(ea, s).trees.size();
      const PackingResult r = generic_stree_packing(ea.graph(), s, static_cast<int>(built));
      out.require(r.status == PackingStatus::found && check(ea.graph(), r.trees).ok,
                  "EA_3 triple " + std::to_string(i));
      out.require(generic_stree_packing(ea.graph(), s, static_cast<int>(built) + 1).status ==
                      PackingStatus::infeasible,
                  "EA_3 triple " + std::to_string(i) + " admits more trees");
    }
    const Graph cycle = build_burnt_pancake(2);
    for (Vertex a = 0; a < 8; ++a) {
      for (Vertex b = a + 1; b < 8; ++b) {
        for (Vertex c = b + 1; c < 8; ++c) {
          out.require(generic_stree_packing(cycle, {a, b, c}, 2).status ==
                          PackingStatus::infeasible,
                      "8-cycle k = 2 not proved infeasible");
        }
      }
    }
  });

  criterion(11, "certify BP_3 exhaustive is byte-identical across runs", 300, [](Outcome& out) {
    CertifyOptions options;
    options.workers = workers();
    const std::string first = certify_family(Family::burnt_pancake, 3, options).to_json();
    options.workers = 1;
    const std::string second = certify_family(Family::burnt_pancake, 3, options).to_json();
    out.require(!first.empty() && first == second, "certificates differ");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
