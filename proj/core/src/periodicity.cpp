// Copyright 2026 The pgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgame/periodicity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pgame/error.hpp"

namespace pgame {
namespace {

std::string ProfileString(const Game& game, const ActionProfile& profile) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k) os << ',';
    os << game.action_label(k, profile[k]);
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string_view TiePolicyName(TiePolicy policy) {
  return policy == TiePolicy::kStrict ? "strict" : "lex";
}

BestDeviation best_deviation_profile(const Game& game, PlayerIndex player,
                                     ActionIndex action, TiePolicy policy) {
  if (player >= game.num_players() || action >= game.num_actions(player)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "node (" + std::to_string(player) + ", " +
                    std::to_string(action) + ")");
  }
  std::vector<std::size_t> sizes(game.num_players());
  for (std::size_t k = 0; k < sizes.size(); ++k) sizes[k] = game.num_actions(k);
  sizes[player] = 1;

  BestDeviation out;
  const Rational* best = nullptr;
  ForEachProfile(sizes, [&](const ActionProfile& opponents) {
    ActionProfile profile = opponents;
    profile[player] = action;
    const Rational& u = game.payoff(profile, player);
    if (best == nullptr || u > *best) {
      best = &u;
      out.maximizers.assign(1, profile);
    } else if (u == *best) {
      out.maximizers.push_back(profile);
    }
  });
  out.profile = out.maximizers.front();
  out.strict = out.maximizers.size() == 1;
  if (!out.strict && policy == TiePolicy::kStrict) {
    std::string tied;
    for (const auto& p : out.maximizers) {
      if (!tied.empty()) tied += ' ';
      tied += ProfileString(game, p);
    }
    throw Error(ErrorCode::kDegenerateArgmax,
                "player " + game.player_name(player) + " playing " +
                    game.action_label(player, action) +
                    " has tied best opponent profiles " + tied);
  }
  return out;
}

std::size_t PeriodicityGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& out : successors_) total += out.size();
  return total;
}

std::size_t PeriodicityGraph::node_id(const Node& node) const {
  if (node.player >= offsets_.size() ||
      node.action >= action_labels_[node.player].size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "node (" + std::to_string(node.player) + ", " +
                    std::to_string(node.action) + ")");
  }
  return offsets_[node.player] + node.action;
}

const std::vector<Node>& PeriodicityGraph::successors(const Node& node) const {
  return successors_[node_id(node)];
}

std::vector<Edge> PeriodicityGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    for (const Node& to : successors_[id]) out.push_back({nodes_[id], to});
  }
  return out;
}

bool PeriodicityGraph::has_edge(const Node& from, const Node& to) const {
  const auto& out = successors(from);
  return std::find(out.begin(), out.end(), to) != out.end();
}

const std::string& PeriodicityGraph::action_label(const Node& node) const {
  return action_labels_.at(node.player).at(node.action);
}

std::string PeriodicityGraph::node_name(const Node& node) const {
  return player_names_.at(node.player) + ":" + action_label(node);
}

PeriodicityGraph build_periodicity_graph(const Game& game, TiePolicy policy) {
  PeriodicityGraph g;
  g.policy_ = policy;
  g.player_names_ = game.players();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    g.offsets_.push_back(g.nodes_.size());
    g.action_labels_.push_back(game.actions(i));
    for (std::size_t a = 0; a < game.num_actions(i); ++a) {
      g.nodes_.push_back({i, a});
    }
  }
  g.successors_.resize(g.nodes_.size());
  for (std::size_t id = 0; id < g.nodes_.size(); ++id) {
    const Node& from = g.nodes_[id];
    BestDeviation dev =
        best_deviation_profile(game, from.player, from.action, policy);
    if (!dev.strict) g.degenerate_.insert(from);
    for (std::size_t j = 0; j < game.num_players(); ++j) {
      if (j != from.player) g.successors_[id].push_back({j, dev.profile[j]});
    }
  }
  return g;
}

std::vector<PlayerIndex> Cycle::player_sequence() const {
  std::vector<PlayerIndex> seq;
  seq.reserve(nodes.size());
  for (const Node& n : nodes) seq.push_back(n.player);
  return seq;
}

bool Cycle::contains(const Node& node) const {
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

std::vector<bool> OnCycleMask(const PeriodicityGraph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<bool> on_cycle(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    for (const Node& next : graph.successors(graph.node(s))) {
      const std::size_t id = graph.node_id(next);
      if (!seen[id]) {
        seen[id] = true;
        queue.push_back(id);
      }
    }
    while (!queue.empty() && !seen[s]) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const Node& next : graph.successors(graph.node(cur))) {
        const std::size_t id = graph.node_id(next);
        if (!seen[id]) {
          seen[id] = true;
          queue.push_back(id);
        }
      }
    }
    on_cycle[s] = seen[s];
  }
  return on_cycle;
}

ActionSets periodic_actions(const PeriodicityGraph& graph) {
  ActionSets sets(graph.num_players());
  const auto mask = OnCycleMask(graph);
  for (std::size_t id = 0; id < mask.size(); ++id) {
    if (mask[id]) {
      sets[graph.node(id).player].push_back(graph.node(id).action);
    }
  }
  return sets;
}

ActionSets periodic_actions(const Game& game, TiePolicy policy) {
  return periodic_actions(build_periodicity_graph(game, policy));
}

namespace {

// Bounded simple-cycle search from `start`. Only nodes accepted by `allowed`
// may appear after the start node.
void CollectCycles(const PeriodicityGraph& graph, std::size_t start,
                   std::size_t max_len,
                   const std::function<bool(std::size_t)>& allowed,
                   std::vector<Cycle>& out) {
  std::vector<bool> on_path(graph.num_nodes(), false);
  std::vector<Node> path{graph.node(start)};
  on_path[start] = true;

  std::function<void(std::size_t)> dfs = [&](std::size_t cur) {
    for (const Node& next : graph.successors(graph.node(cur))) {
      const std::size_t id = graph.node_id(next);
      if (id == start) {
        if (path.size() <= max_len) {
          out.push_back({path, graph.num_players()});
        }
        continue;
      }
      if (on_path[id] || !allowed(id) || path.size() >= max_len) continue;
      on_path[id] = true;
      path.push_back(next);
      dfs(id);
      path.pop_back();
      on_path[id] = false;
    }
  };
  dfs(start);
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const PeriodicityGraph& graph,
                                    const Node& through, std::size_t max_len) {
  const std::size_t start = graph.node_id(through);
  std::vector<Cycle> out;
  CollectCycles(graph, start, max_len, [](std::size_t) { return true; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_all_cycles(const PeriodicityGraph& graph,
                                        std::optional<std::size_t> max_len) {
  const std::size_t limit = max_len.value_or(graph.num_nodes());
  std::vector<Cycle> out;
  for (std::size_t s = 0; s < graph.num_nodes(); ++s) {
    CollectCycles(graph, s, limit, [s](std::size_t id) { return id > s; },
                  out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> reach_cycle(const PeriodicityGraph& graph,
                              const Node& start) {
  const auto on_cycle = OnCycleMask(graph);
  const std::size_t n = graph.num_nodes();
  const std::size_t s = graph.node_id(start);
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (on_cycle[cur]) {
      std::vector<Node> walk;
      for (std::size_t v = cur; v != n; v = parent[v]) {
        walk.push_back(graph.node(v));
      }
      std::reverse(walk.begin(), walk.end());
      return walk;
    }
    for (const Node& next : graph.successors(graph.node(cur))) {
      const std::size_t id = graph.node_id(next);
      if (!seen[id]) {
        seen[id] = true;
        parent[id] = cur;
        queue.push_back(id);
      }
    }
  }
  // Unreachable: every node has an out-edge in a finite graph.
  throw std::logic_error("periodicity graph walk found no cycle");
}

std::size_t periodicity_number(const Cycle& cycle, PlayerIndex anchor_player) {
  const auto n = static_cast<std::size_t>(
      std::count_if(cycle.nodes.begin(), cycle.nodes.end(),
                    [&](const Node& v) { return v.player == anchor_player; }));
  if (n == 0) {
    throw Error(ErrorCode::kAnchorNotOnCycle,
                "player " + std::to_string(anchor_player) +
                    " has no node on the cycle");
  }
  return n;
}

}  // namespace pgame
