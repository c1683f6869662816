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

// Exact search for k internally edge-disjoint S-trees, |S| = 3.
//
// Only minimal trees need to be considered: every leaf is a terminal, so a
// tree is an (x, y)-path plus a path from z to a vertex of it (empty when z
// lies on the path). The search picks trees one at a time, each with a
// strictly larger first vertex after x on its (x, y)-path, which fixes a
// canonical order of the trees. Tree size is bounded by iterative deepening;
// when a bounded pass fails without ever hitting the bound, the failure is
// exhaustive. Failed states are memoized per pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

#include "construction.hpp"

namespace cayley {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

struct BudgetExhausted {};

class PackingSearch {
 public:
  PackingSearch(const Graph& g, Triple s, int k, std::chrono::milliseconds budget)
      : g_(g),
        s_(s),
        k_(k),
        terminal_(g.order(), -1),
        used_(g.order(), 0),
        on_path_(g.order(), 0),
        in_branch_(g.order(), 0) {
    for (int t = 0; t < 3; ++t) terminal_[s[t]] = t;
    if (budget.count() > 0) {
      deadline_ = std::chrono::steady_clock::now() + budget;
      timed_ = true;
    }
  }

  PackingStatus run() {
    if (k_ <= 0) return PackingStatus::found;
    try {
      for (limit_ = 2; limit_ <= std::max(2, g_.order() - 1); ++limit_) {
        memo_.clear();
        limit_hit_ = false;
        if (search(k_, 0)) return PackingStatus::found;
        if (!limit_hit_) return PackingStatus::infeasible;
      }
      return PackingStatus::infeasible;
    } catch (const BudgetExhausted&) {
      return PackingStatus::indeterminate;
    }
  }

  const std::vector<std::vector<Edge>>& trees() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool is_terminal(Vertex v) const { return terminal_[v] >= 0; }

  int pair_bit(Vertex a, Vertex b) const {
    return 1 << (terminal_[a] + terminal_[b] - 1);
  }

  bool vertex_free(Vertex v) const { return is_terminal(v) || !used_[v]; }

  bool edge_free(Vertex a, Vertex b) const {
    if (is_terminal(a) && is_terminal(b)) return (used_pairs_ & pair_bit(a, b)) == 0;
    return true;
  }

  // Counts edge {a, b} against the per-tree terminal budgets.
  bool charge(Vertex a, Vertex b) {
    bool ok = true;
    for (Vertex v : {a, b}) {
      if (is_terminal(v)) ok = ++uses_[terminal_[v]] <= caps_[terminal_[v]] && ok;
    }
    return ok;
  }
  void uncharge(Vertex a, Vertex b) {
    for (Vertex v : {a, b}) {
      if (is_terminal(v)) --uses_[terminal_[v]];
    }
  }

  void tick() {
    ++nodes_;
    if (timed_ && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExhausted{};
    }
  }

  std::string state_key(int remaining, Vertex min_first) const {
    std::string key;
    key.reserve(g_.order() / 8 + 12);
    key += static_cast<char>(remaining);
    key += static_cast<char>(used_pairs_);
    key.append(reinterpret_cast<const char*>(&min_first), sizeof(min_first));
    unsigned char byte = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      byte = static_cast<unsigned char>((byte << 1) | (used_[v] ? 1 : 0));
      if ((v & 7) == 7) {
        key += static_cast<char>(byte);
        byte = 0;
      }
    }
    key += static_cast<char>(byte);
    return key;
  }

  // Each remaining tree needs its own edge at every terminal, and a distinct
  // first step from x not below min_first. The next tree may therefore use
  // at most room - (remaining - 1) edges at each terminal.
  bool enough_room(int remaining, Vertex min_first) {
    for (int t = 0; t < 3; ++t) {
      const Vertex v = s_[t];
      int room = 0;
      int first_steps = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!(is_terminal(w) ? edge_free(v, w) : !used_[w])) continue;
        ++room;
        if (w >= min_first) ++first_steps;
      }
      if (room < remaining || (t == 0 && first_steps < remaining)) return false;
      caps_[t] = room - (remaining - 1);
      uses_[t] = 0;
    }
    return true;
  }

  // BFS distances to y through usable vertices, never passing through x.
  void distances_to_y(std::vector<int>& dist) const {
    dist.assign(g_.order(), kUnreachable);
    std::deque<Vertex> queue{s_[1]};
    dist[s_[1]] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (v == s_[0]) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (dist[w] != kUnreachable || !vertex_free(w)) continue;
        if (!edge_free(v, w)) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }

  bool search(int remaining, Vertex min_first) {
    tick();
    if (remaining == 0) return true;
    if (!enough_room(remaining, min_first)) return false;
    const std::string key = state_key(remaining, min_first);
    if (memo_.count(key)) return false;

    std::vector<int> to_y;
    distances_to_y(to_y);

    path_.assign(1, s_[0]);
    on_path_[s_[0]] = 1;
    const bool ok = extend_path(s_[0], to_y, remaining, min_first);
    on_path_[s_[0]] = 0;
    if (!ok) memo_.insert(key);
    return ok;
  }

  bool extend_path(Vertex v, const std::vector<int>& to_y, int remaining,
                   Vertex min_first) {
    tick();
    const int length = static_cast<int>(path_.size()) - 1;
    for (Vertex w : g_.neighbors(v)) {
      if (v == s_[0] && w < min_first) continue;
      if (on_path_[w] || !vertex_free(w) || !edge_free(v, w)) continue;
      if (length + 1 + to_y[w] > limit_) {
        if (to_y[w] != kUnreachable) limit_hit_ = true;
        continue;
      }
      if (!charge(v, w)) {
        uncharge(v, w);
        continue;
      }
      path_.push_back(w);
      on_path_[w] = 1;
      const bool ok = w == s_[1] ? attach_branch(remaining)
                                 : extend_path(w, to_y, remaining, min_first);
      on_path_[w] = 0;
      path_.pop_back();
      uncharge(v, w);
      if (ok) return true;
    }
    return false;
  }

  bool attach_branch(int remaining) {
    const Vertex z = s_[2];
    if (on_path_[z]) {
      branch_.clear();
      return commit(remaining);
    }
    // Distances from the path through vertices the branch may use.
    std::vector<int> to_path(g_.order(), kUnreachable);
    std::deque<Vertex> queue;
    for (Vertex v : path_) {
      to_path[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (!on_path_[v] && is_terminal(v)) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (to_path[w] != kUnreachable || on_path_[w] || !vertex_free(w)) continue;
        if (!edge_free(v, w)) continue;
        to_path[w] = to_path[v] + 1;
        queue.push_back(w);
      }
    }
    branch_.assign(1, z);
    in_branch_[z] = 1;
    const bool ok = extend_branch(z, to_path, remaining);
    in_branch_[z] = 0;
    return ok;
  }

  bool extend_branch(Vertex v, const std::vector<int>& to_path, int remaining) {
    tick();
    const int used_edges = static_cast<int>(path_.size() + branch_.size()) - 1;
    for (Vertex w : g_.neighbors(v)) {
      if (!edge_free(v, w)) continue;
      if (on_path_[w]) {
        bool ok = false;
        if (charge(v, w)) {
          branch_.push_back(w);
          ok = commit(remaining);
          branch_.pop_back();
        }
        uncharge(v, w);
        if (ok) return true;
        continue;
      }
      if (in_branch_[w] || is_terminal(w) || used_[w]) continue;
      if (used_edges + to_path[w] > limit_) {
        if (to_path[w] != kUnreachable) limit_hit_ = true;
        continue;
      }
      if (!charge(v, w)) {
        uncharge(v, w);
        continue;
      }
      branch_.push_back(w);
      in_branch_[w] = 1;
      const bool ok = extend_branch(w, to_path, remaining);
      in_branch_[w] = 0;
      branch_.pop_back();
      uncharge(v, w);
      if (ok) return true;
    }
    return false;
  }

  // Claims the current path + branch as a tree and recurses.
  bool commit(int remaining) {
    std::vector<Edge> tree;
    detail::append_path(tree, path_);
    detail::append_path(tree, branch_);
    if (static_cast<int>(tree.size()) > limit_) {
      limit_hit_ = true;
      return false;
    }
    std::sort(tree.begin(), tree.end());
    const int saved_pairs = used_pairs_;
    std::vector<Vertex> claimed;
    for (const Edge& e : tree) {
      if (is_terminal(e.u) && is_terminal(e.v)) used_pairs_ |= pair_bit(e.u, e.v);
      for (Vertex v : {e.u, e.v}) {
        if (!is_terminal(v) && !used_[v]) {
          used_[v] = 1;
          claimed.push_back(v);
        }
      }
    }
    const Vertex first = path_[1];
    chosen_.push_back(std::move(tree));
    // path_ and branch_ are rebuilt by the nested search; keep copies.
    const auto saved_caps = caps_;
    const auto saved_uses = uses_;
    const auto saved_path = path_;
    const auto saved_branch = branch_;
    std::vector<char> saved_on_path(on_path_);
    std::vector<char> saved_in_branch(in_branch_);
    std::fill(on_path_.begin(), on_path_.end(), 0);
    std::fill(in_branch_.begin(), in_branch_.end(), 0);
    const bool ok = search(remaining - 1, first + 1);
    if (ok) return true;
    caps_ = saved_caps;
    uses_ = saved_uses;
    on_path_ = std::move(saved_on_path);
    in_branch_ = std::move(saved_in_branch);
    path_ = saved_path;
    branch_ = saved_branch;
    chosen_.pop_back();
    for (Vertex v : claimed) used_[v] = 0;
    used_pairs_ = saved_pairs;
    return false;
  }

  const Graph& g_;
  Triple s_;
  int k_;
  std::vector<int> terminal_;
  std::vector<char> used_;
  int used_pairs_ = 0;
  // Edges the current tree may still use at each terminal, and has used.
  std::array<int, 3> caps_{};
  std::array<int, 3> uses_{};
  std::vector<char> on_path_;
  std::vector<char> in_branch_;
  std::vector<Vertex> path_;
  std::vector<Vertex> branch_;
  std::vector<std::vector<Edge>> chosen_;
  std::unordered_set<std::string> memo_;
  int limit_ = 2;
  bool limit_hit_ = false;
  std::uint64_t nodes_ = 0;
  bool timed_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

PackingResult generic_stree_packing(const Graph& g, Triple s, int k,
                                    const PackingOptions& options) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw std::domain_error("vertex out of range");
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw std::domain_error("S must consist of three distinct vertices");
  }
  s = detail::sorted_triple(s);
  PackingSearch search(g, s, k, options.budget);
  PackingResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  result.trees.terminals = s;
  result.trees.case_label = case_label::kGenericPacking;
  if (result.status == PackingStatus::found) result.trees.trees = search.trees();
  return result;
}

}  // namespace cayley
