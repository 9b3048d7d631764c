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

#ifndef PGAME_GAME_HPP
#define PGAME_GAME_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgame/rational.hpp"

namespace pgame {

using PlayerIndex = std::size_t;
using ActionIndex = std::size_t;

// One action index per player, in player order.
using ActionProfile = std::vector<ActionIndex>;
// One utility per player, in player order.
using PayoffVector = std::vector<Rational>;
// Probabilities over one player's actions.
using MixedStrategy = std::vector<Rational>;

struct MixedProfile {
  std::vector<MixedStrategy> strategies;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile&, const MixedProfile&) = default;
};

// Unvalidated description of a game, as read from a file or assembled by
// hand. Missing profiles are simply absent from `payoffs`.
struct GameData {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::map<ActionProfile, PayoffVector> payoffs;
};

// Throws Error(kBadDimension | kDuplicateLabel | kMissingProfile |
// kIndexOutOfRange) naming the first offending player, label, or profile.
void validate_game(const GameData& data);

// Finite N-player strategic-form game with exact payoffs.
//
// Payoffs are stored densely in row-major order: player 0's action is the
// most significant digit and the last player's action varies fastest.
// Instances are immutable once constructed.
class Game {
 public:
  explicit Game(const GameData& data);
  // `payoffs` is the dense row-major table; see class comment.
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> actions,
       std::vector<PayoffVector> payoffs);

  // Builds the table by evaluating `payoff` on every profile.
  static Game FromFunction(
      std::vector<std::string> players,
      std::vector<std::vector<std::string>> actions,
      const std::function<PayoffVector(const ActionProfile&)>& payoff);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_actions(PlayerIndex player) const;
  std::size_t num_profiles() const { return payoffs_.size(); }
  std::size_t num_nodes() const;

  const std::vector<std::string>& players() const { return players_; }
  const std::string& player_name(PlayerIndex player) const;
  const std::vector<std::string>& actions(PlayerIndex player) const;
  const std::string& action_label(PlayerIndex player, ActionIndex a) const;

  std::optional<PlayerIndex> find_player(const std::string& name) const;
  std::optional<ActionIndex> find_action(PlayerIndex player,
                                         const std::string& label) const;

  // Throws Error(kIndexOutOfRange) on a malformed profile.
  const PayoffVector& payoff(const ActionProfile& profile) const;
  const Rational& payoff(const ActionProfile& profile,
                         PlayerIndex player) const;

  std::size_t flat_index(const ActionProfile& profile) const;
  ActionProfile profile_at(std::size_t flat_index) const;

  // Row-major payoff table, parallel to profile_at(0..num_profiles()).
  const std::vector<PayoffVector>& table() const { return payoffs_; }

  GameData ToData() const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<PayoffVector> payoffs_;
  std::vector<std::size_t> strides_;
};

// Calls `visit` on every action profile in row-major order.
void ForEachProfile(const std::vector<std::size_t>& sizes,
                    const std::function<void(const ActionProfile&)>& visit);

// Advances `profile` to the next one in row-major order; returns false after
// the last profile (leaving `profile` reset to all zeros).
bool NextProfile(ActionProfile& profile, const std::vector<std::size_t>& sizes);

void validate_game(const Game& game);

// Throws Error(kDimensionMismatch) on shape errors and
// Error(kInvalidDistribution) if a vector is negative somewhere or does not
// sum to exactly 1.
void validate_mixed_profile(const Game& game, const MixedProfile& mixed);

// Exact sum over profiles of payoff times the product of probabilities.
PayoffVector expected_utility(const Game& game, const MixedProfile& mixed);

MixedStrategy PureStrategy(std::size_t num_actions, ActionIndex action);
MixedProfile PureProfile(const Game& game, const ActionProfile& profile);

// Sub-game keeping, for each player, the listed actions (in the given order).
Game restrict_game(const Game& game,
                   const std::vector<std::vector<ActionIndex>>& kept);

// Two-player payoff matrix of one player, rows = player 0's actions.
std::vector<std::vector<Rational>> PayoffMatrix(const Game& game,
                                                PlayerIndex player);

// Throws Error(kNotTwoPlayer) unless the game has exactly two players.
void RequireTwoPlayers(const Game& game, std::string_view operation);

}  // namespace pgame

#endif  // PGAME_GAME_HPP
