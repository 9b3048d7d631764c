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

#ifndef PGAME_BAYESIAN_HPP
#define PGAME_BAYESIAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgame/game.hpp"

namespace pgame {

using ThetaIndex = std::size_t;
using TypeIndex = std::size_t;
// One type index per player (or per opponent, where noted).
using TypeProfile = std::vector<TypeIndex>;

struct PriorEntry {
  ThetaIndex theta = 0;
  TypeProfile types;
  Rational probability;
};

struct BayesianGameData {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::vector<std::string> thetas;
  std::vector<std::vector<std::string>> types;
  std::vector<PriorEntry> prior;
  // One dense row-major payoff table per theta (see Game).
  std::vector<std::vector<PayoffVector>> payoffs;
};

// Finite Bayesian game with a common prior over (theta, type profile).
class BayesianGame {
 public:
  // Validates: shapes, unique labels, prior entries in range, nonnegative,
  // no duplicates, summing to exactly 1. Throws Error.
  explicit BayesianGame(BayesianGameData data);

  std::size_t num_players() const { return data_.players.size(); }
  std::size_t num_thetas() const { return data_.thetas.size(); }
  std::size_t num_types(PlayerIndex player) const;

  const std::vector<std::string>& players() const { return data_.players; }
  const std::vector<std::string>& actions(PlayerIndex player) const;
  const std::vector<std::string>& thetas() const { return data_.thetas; }
  const std::vector<std::string>& types(PlayerIndex player) const;

  // Complete-information game of state `theta`.
  const Game& state_game(ThetaIndex theta) const;
  const std::map<std::pair<ThetaIndex, TypeProfile>, Rational>& prior() const {
    return prior_;
  }
  Rational prior_of(ThetaIndex theta, const TypeProfile& types) const;
  Rational type_marginal(PlayerIndex player, TypeIndex type) const;

  const BayesianGameData& data() const { return data_; }

 private:
  BayesianGameData data_;
  std::vector<Game> states_;
  std::map<std::pair<ThetaIndex, TypeProfile>, Rational> prior_;
};

// Belief of type `type` of `player` over (theta, opponent types), where the
// opponent type profile lists the other players in player order.
struct InterimBelief {
  PlayerIndex player = 0;
  TypeIndex type = 0;
  std::map<std::pair<ThetaIndex, TypeProfile>, Rational> mass;
};

// Prior conditioned on the type. Throws Error(kZeroProbabilityType).
InterimBelief conditional_belief(const BayesianGame& bg, PlayerIndex player,
                                 TypeIndex type);

// Marginal of the interim belief on theta.
std::vector<Rational> first_order_belief(const BayesianGame& bg,
                                         PlayerIndex player, TypeIndex type);

// Opponent type profiles grouped by the first-order beliefs they induce.
struct BeliefClass {
  // First-order belief of each opponent, in player order.
  std::vector<std::vector<Rational>> opponent_beliefs;
  std::vector<TypeProfile> members;
};

struct SecondOrderBelief {
  std::vector<BeliefClass> classes;
  // (theta, class index) -> probability
  std::map<std::pair<ThetaIndex, std::size_t>, Rational> mass;
};

SecondOrderBelief second_order_belief(const BayesianGame& bg,
                                      PlayerIndex player, TypeIndex type);

struct ExAnteOptions {
  // Upper bound on the number of strategy profiles of the ex-ante game.
  std::size_t max_profiles = std::size_t{1} << 20;
};

// Game over type-contingent strategies T_i -> A_i with prior-expected payoffs.
// Strategy labels concatenate the per-type action labels in type order.
Game ex_ante_game(const BayesianGame& bg, const ExAnteOptions& options = {});

// Game whose players are the (player, type) pairs, ordered by player then
// type, each choosing from its player's actions and receiving its
// type-conditional expected payoff. Player names are the type labels when
// those are globally unique, otherwise "player:type".
Game interim_game(const BayesianGame& bg);

struct ConditionedGame {
  TypeProfile types;
  Rational probability;
  Game game;
};

// For every type profile with positive prior mass, the expected game over
// theta conditioned on that profile, in profile order.
std::vector<ConditionedGame> interim_correlated_games(const BayesianGame& bg);

// The conditioned game for `types`, or for the unique positive type profile
// when `types` is empty. Throws Error(kAmbiguousTypeProfile) when several
// profiles are possible and none was chosen, Error(kZeroProbabilityType) when
// a type or the chosen profile has no prior mass, and Error(kIndexOutOfRange)
// for an unknown type.
Game interim_correlated_game(const BayesianGame& bg,
                             const std::optional<TypeProfile>& types = {});

}  // namespace pgame

#endif  // PGAME_BAYESIAN_HPP
