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

// Command-line front end: gen, props, kappa, trees, certify.
//
// Exit codes: 0 success / passing certificate, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley_steiner/flows.hpp"
#include "cayley_steiner/io.hpp"
#include "cayley_steiner/topology.hpp"
#include "cayley_steiner/trees.hpp"
#include "cayley_steiner/verify.hpp"

namespace {

using namespace cayley;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family;
  int n = 0;
  std::string format = "text";
  std::string output;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  std::vector<std::string> labels;
  int punctured = 0;
};

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Graph plus vertex groups for colouring, for any of the three families.
struct Built {
  Graph graph;
  std::vector<int> groups;
};

Built build(const std::string& family, int n) {
  const std::string f = upper(family);
  if (f == "BP") {
    if (n < 2 || n > kMaxBurntPancakeN) {
      throw UsageError("BP needs 2 <= n <= " + std::to_string(kMaxBurntPancakeN));
    }
    Graph g = build_burnt_pancake(n);
    const ClusterDecomposition dec = cluster_decomposition(g, n);
    std::vector<int> groups;
    for (const ClusterId& c : dec.cluster_of) groups.push_back(c.index());
    return {std::move(g), std::move(groups)};
  }
  if (f == "EA" || f == "AN") {
    if (n < 3 || n > kMaxGodanN) {
      throw UsageError(f + " needs 3 <= n <= " + std::to_string(kMaxGodanN));
    }
    if (f == "AN") return {build_alternating_network(n), {}};
    Graph g = build_godan(n);
    std::vector<int> groups;
    for (Vertex v = 0; v < g.order(); ++v) {
      groups.push_back(parity(unrank_permutation(n, v)) == Parity::even ? 0 : 1);
    }
    return {std::move(g), std::move(groups)};
  }
  throw UsageError("unknown family '" + family + "' (expected BP, EA or AN)");
}

Family tree_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected BP or EA)");
  return *f;
}

void check_n(Family family, int n) {
  if (family == Family::burnt_pancake && (n < 2 || n > kMaxBurntPancakeN)) {
    throw UsageError("BP needs 2 <= n <= " + std::to_string(kMaxBurntPancakeN));
  }
  if (family == Family::godan && (n < 3 || n > kMaxGodanN)) {
    throw UsageError("EA needs 3 <= n <= " + std::to_string(kMaxGodanN));
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot open " + cfg.output + " for writing");
  out << text;
}

PackingOptions packing_from_env() {
  PackingOptions options;
  if (const char* budget = std::getenv("CAYLEY_STEINER_BUDGET_MS")) {
    try {
      options.budget = std::chrono::milliseconds(std::stoll(budget));
    } catch (const std::exception&) {
      throw UsageError("CAYLEY_STEINER_BUDGET_MS must be an integer");
    }
  }
  return options;
}

std::string summary_line(const Graph& g) {
  std::ostringstream line;
  line << "order=" << g.order() << " size=" << g.size()
       << " degree=" << g.min_degree() << ".." << g.max_degree()
       << " regular=" << (g.is_regular() ? "yes" : "no");
  return line.str();
}

int cmd_gen(const RunConfig& cfg) {
  const Built built = build(cfg.family, cfg.n);
  const Graph& g = built.graph;
  std::string text;
  if (cfg.format == "json") {
    text = graph_to_json(g);
  } else if (cfg.format == "dot") {
    text = graph_to_dot(g, built.groups);
  } else {
    std::ostringstream out;
    for (Vertex v = 0; v < g.order(); ++v) {
      out << g.label(v) << ":";
      for (Vertex w : g.neighbors(v)) out << " " << g.label(w);
      out << "\n";
    }
    text = out.str();
  }
  emit(cfg, text);
  // Keep stdout clean for the dump itself.
  (cfg.output.empty() ? std::cerr : std::cout) << summary_line(g) << "\n";
  return 0;
}

int cmd_props(const RunConfig& cfg) {
  const Built built = build(cfg.family, cfg.n);
  const Graph& g = built.graph;
  const auto bound = upper_bound_lemma1(g);
  nlohmann::ordered_json j;
  j["family"] = upper(cfg.family);
  j["n"] = cfg.n;
  j["order"] = g.order();
  j["size"] = g.size();
  j["min_degree"] = g.min_degree();
  j["max_degree"] = g.max_degree();
  j["regular"] = g.is_regular();
  j["connected"] = g.is_connected();
  j["kappa3_upper_bound"] = bound ? nlohmann::ordered_json(*bound) : nullptr;
  if (upper(cfg.family) == "BP") {
    const ClusterDecomposition dec = cluster_decomposition(g, cfg.n);
    j["clusters"] = dec.cluster_count();
    j["cluster_size"] = dec.members[0].size();
  }
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
    emit(cfg, out.str());
  }
  return 0;
}

int cmd_kappa(const RunConfig& cfg) {
  Built built = build(cfg.family, cfg.n);
  std::string target = upper(cfg.family) + "_" + std::to_string(cfg.n);
  if (cfg.punctured != 0) {
    if (upper(cfg.family) != "BP" || std::abs(cfg.punctured) > cfg.n) {
      throw UsageError("--punctured takes a cluster symbol of BP_n");
    }
    built.graph = punctured_bp(cfg.n, ClusterId{cfg.punctured});
    target += " minus cluster " + std::to_string(cfg.punctured);
  }
  const int kappa = vertex_connectivity(built.graph);
  nlohmann::ordered_json j;
  j["graph"] = target;
  j["kappa"] = kappa;
  j["kappa3_lower_bound"] = kappa >= 1 ? lower_bound_lemma2(kappa) : 0;
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, target + ": kappa=" + std::to_string(kappa) + " kappa3>=" +
                  j["kappa3_lower_bound"].dump() + "\n");
  }
  return 0;
}

Vertex parse_vertex(Family family, int n, const std::string& text) {
  try {
    if (family == Family::burnt_pancake) {
      const SignedPermutation x = SignedPermutation::parse(text);
      if (x.size() != n) throw UsageError("label '" + text + "' has the wrong length");
      return static_cast<Vertex>(rank(x));
    }
    const Permutation p = Permutation::parse(text);
    if (p.size() != n) throw UsageError("label '" + text + "' has the wrong length");
    return static_cast<Vertex>(rank(p));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad vertex label '" + text + "': " + e.what());
  }
}

int cmd_trees(const RunConfig& cfg) {
  const Family family = tree_family(cfg.family);
  check_n(family, cfg.n);
  Triple s{};
  for (int i = 0; i < 3; ++i) s[i] = parse_vertex(family, cfg.n, cfg.labels[i]);
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw UsageError("the three labels must be distinct");
  }
  STreeSet set;
  const Graph* g = nullptr;
  std::optional<BurntPancakeNetwork> bp;
  std::optional<GodanNetwork> ea;
  try {
    if (family == Family::burnt_pancake) {
      bp.emplace(cfg.n);
      g = &bp->graph();
      set = bp_trees(*bp, s);
    } else {
      ea.emplace(cfg.n);
      g = &ea->graph();
      set = ea_trees(*ea, s, packing_from_env());
    }
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitFail;
  }
  const CheckResult verdict = check(*g, set);
  if (!verdict) {
    std::cerr << "verification failed: " << verdict.reason << "\n";
    return kExitFail;
  }
  if (cfg.format == "json") {
    emit(cfg, stree_set_to_json(family_name(family), cfg.n, *g, set));
  } else {
    std::ostringstream out;
    out << "case: " << set.case_label << "\n";
    for (const std::string& note : set.notes) out << "note: " << note << "\n";
    for (std::size_t t = 0; t < set.trees.size(); ++t) {
      out << "tree " << t << ":";
      for (const Edge& e : set.trees[t]) out << " {" << g->label(e.u) << " " << g->label(e.v) << "}";
      out << "\n";
    }
    out << set.trees.size() << " trees, verified\n";
    emit(cfg, out.str());
  }
  return 0;
}

int cmd_certify(const RunConfig& cfg) {
  const Family family = tree_family(cfg.family);
  check_n(family, cfg.n);
  if (cfg.exhaustive == (cfg.sample > 0)) {
    throw UsageError("certify needs exactly one of --exhaustive or --sample COUNT");
  }
  CertifyOptions options;
  options.sample = cfg.sample;
  options.seed = cfg.seed;
  options.workers = cfg.workers > 0
                        ? cfg.workers
                        : std::max(1u, std::thread::hardware_concurrency());
  options.packing = packing_from_env();
  Certificate cert;
  try {
    cert = certify_family(family, cfg.n, options);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const std::string json = cert.to_json();
  if (cfg.format == "json" || !cfg.output.empty()) emit(cfg, json);
  if (cfg.format != "json" || !cfg.output.empty()) {
    std::cout << family_name(family) << "_" << cfg.n << ": "
              << (cert.passed() ? "PASS" : "FAIL") << " covered=" << cert.covered_triples
              << " failures=" << cert.failures.size() << " kappa=" << cert.kappa
              << " kappa3="
              << (cert.claimed_kappa3 ? std::to_string(*cert.claimed_kappa3) : "none")
              << "\n";
    for (const auto& [label, count] : cert.case_tallies) {
      std::cout << "  " << label << ": " << count << "\n";
    }
  }
  return cert.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnt pancake and godan graphs: generation, connectivity and "
               "internally edge-disjoint S-trees"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool graph_families) {
    sub->add_option("family", cfg.family,
                    graph_families ? "BP, EA or AN" : "BP or EA")
        ->required();
    sub->add_option("n", cfg.n, "Size parameter")->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "Write the graph as DOT, JSON or text");
  add_common(gen, true);
  CLI::App* props = app.add_subcommand("props", "Print structural properties");
  add_common(props, true);
  CLI::App* kappa = app.add_subcommand("kappa", "Compute vertex connectivity");
  add_common(kappa, true);
  kappa->add_option("--punctured", cfg.punctured,
                    "Remove this cluster of BP_n first (signed symbol)");
  CLI::App* trees = app.add_subcommand("trees", "Build and verify n - 1 S-trees");
  add_common(trees, false);
  trees->add_option("labels", cfg.labels, "Three vertex labels, e.g. \"1,-2,3\"")
      ->expected(3)
      ->required();
  CLI::App* certify = app.add_subcommand("certify", "Certify a whole family at n");
  add_common(certify, false);
  certify->add_flag("--exhaustive", cfg.exhaustive, "Cover every 3-set");
  certify->add_option("--sample", cfg.sample, "Stratified sample of this many 3-sets");
  certify->add_option("--seed", cfg.seed, "Sampling seed");
  certify->add_option("--workers", cfg.workers,
                      "Worker threads (default: available parallelism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*props) return cmd_props(cfg);
    if (*kappa) return cmd_kappa(cfg);
    if (*trees) return cmd_trees(cfg);
    return cmd_certify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
