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

#ifndef PGAME_PERIODICITY_HPP
#define PGAME_PERIODICITY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgame/game.hpp"

namespace pgame {

// How to resolve a non-unique maximizer in the deviation argmax.
//   kStrict         throw Error(kDegenerateArgmax).
//   kLexicographic  take the first maximizer in row-major opponent order
//                   and flag the node as degenerate.
enum class TiePolicy { kStrict, kLexicographic };

std::string_view TiePolicyName(TiePolicy policy);

struct Node {
  PlayerIndex player = 0;
  ActionIndex action = 0;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct BestDeviation {
  // Full profile: `action` for the deviating player, the maximizing
  // opponent actions everywhere else.
  ActionProfile profile;
  // True iff this is the unique maximizer of the player's payoff.
  bool strict = true;
  // Every maximizing profile, in row-major order (size 1 when strict).
  std::vector<ActionProfile> maximizers;
};

// Maximizes U_player(action, .) jointly over all opponent profiles.
BestDeviation best_deviation_profile(const Game& game, PlayerIndex player,
                                     ActionIndex action, TiePolicy policy);

struct Edge {
  Node from;
  Node to;  // `to.player` doubles as the edge label

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed graph on (player, action) nodes. Each node (i, a) has one edge per
// opponent j, pointing at j's component of i's best deviation profile.
class PeriodicityGraph {
 public:
  std::size_t num_players() const { return player_names_.size(); }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const;

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t node_id(const Node& node) const;
  const Node& node(std::size_t id) const { return nodes_.at(id); }

  // Out-neighbours of `node`, ordered by target player.
  const std::vector<Node>& successors(const Node& node) const;
  std::vector<Edge> edges() const;
  bool has_edge(const Node& from, const Node& to) const;

  const std::set<Node>& degenerate_nodes() const { return degenerate_; }
  TiePolicy policy() const { return policy_; }

  const std::vector<std::string>& player_names() const {
    return player_names_;
  }
  const std::string& action_label(const Node& node) const;
  // "player:action-label"
  std::string node_name(const Node& node) const;

  friend bool operator==(const PeriodicityGraph&,
                         const PeriodicityGraph&) = default;

 private:
  friend PeriodicityGraph build_periodicity_graph(const Game&, TiePolicy);

  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> action_labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Node>> successors_;
  std::set<Node> degenerate_;
  TiePolicy policy_ = TiePolicy::kLexicographic;
};

PeriodicityGraph build_periodicity_graph(const Game& game, TiePolicy policy);

// Simple directed cycle n_0 -> n_1 -> ... -> n_{L-1} -> n_0.
struct Cycle {
  std::vector<Node> nodes;
  // Player count of the game the cycle came from.
  std::size_t num_players = 0;

  std::size_t length() const { return nodes.size(); }
  std::vector<PlayerIndex> player_sequence() const;
  bool contains(const Node& node) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Per-player sorted action sets.
using ActionSets = std::vector<std::vector<ActionIndex>>;

// Nodes lying on at least one directed cycle.
std::vector<bool> OnCycleMask(const PeriodicityGraph& graph);

// Actions whose node lies on a directed cycle of the periodicity graph.
ActionSets periodic_actions(const PeriodicityGraph& graph);
ActionSets periodic_actions(const Game& game, TiePolicy policy);

// All simple cycles through `through` of at most `max_len` edges, each once,
// rotated to start at `through`, sorted.
std::vector<Cycle> enumerate_cycles(const PeriodicityGraph& graph,
                                    const Node& through, std::size_t max_len);
// Every simple cycle of at most `max_len` edges (default: all), each rotated
// to start at its smallest node, sorted.
std::vector<Cycle> enumerate_all_cycles(const PeriodicityGraph& graph,
                                        std::optional<std::size_t> max_len =
                                            std::nullopt);

// Shortest walk from `start` to a node on a cycle. The result begins with
// `start` and ends on a cycle; its edge count is size() - 1.
std::vector<Node> reach_cycle(const PeriodicityGraph& graph, const Node& start);

// Number of `anchor_player` nodes on the cycle. Throws
// Error(kAnchorNotOnCycle) when there are none.
std::size_t periodicity_number(const Cycle& cycle, PlayerIndex anchor_player);

}  // namespace pgame

#endif  // PGAME_PERIODICITY_HPP
