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

#include "pgame/game.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "pgame/error.hpp"

namespace pgame {
namespace {

std::string ProfileString(const ActionProfile& profile) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k) os << ',';
    os << profile[k];
  }
  os << ')';
  return os.str();
}

void ValidateShape(const std::vector<std::string>& players,
                   const std::vector<std::vector<std::string>>& actions) {
  if (players.size() < 2) {
    throw Error(ErrorCode::kBadDimension,
                "a game needs at least 2 players, got " +
                    std::to_string(players.size()));
  }
  if (actions.size() != players.size()) {
    throw Error(ErrorCode::kBadDimension,
                "action lists given for " + std::to_string(actions.size()) +
                    " players, expected " + std::to_string(players.size()));
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!names.insert(players[i]).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "player " + std::to_string(i) + " reuses name '" +
                      players[i] + "'");
    }
  }
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].empty()) {
      throw Error(ErrorCode::kBadDimension,
                  "player " + std::to_string(i) + " has no actions");
    }
    std::set<std::string> labels;
    for (std::size_t a = 0; a < actions[i].size(); ++a) {
      if (!labels.insert(actions[i][a]).second) {
        throw Error(ErrorCode::kDuplicateLabel,
                    "player " + std::to_string(i) + " action " +
                        std::to_string(a) + " reuses label '" +
                        actions[i][a] + "'");
      }
    }
  }
}

std::vector<std::size_t> Sizes(
    const std::vector<std::vector<std::string>>& actions) {
  std::vector<std::size_t> sizes;
  sizes.reserve(actions.size());
  for (const auto& labels : actions) sizes.push_back(labels.size());
  return sizes;
}

void CheckPayoffLength(const PayoffVector& u, std::size_t n,
                       const ActionProfile& profile) {
  if (u.size() != n) {
    throw Error(ErrorCode::kBadDimension,
                "payoff at profile " + ProfileString(profile) + " has " +
                    std::to_string(u.size()) + " entries, expected " +
                    std::to_string(n));
  }
}

}  // namespace

bool NextProfile(ActionProfile& profile, const std::vector<std::size_t>& sizes) {
  for (std::size_t k = profile.size(); k-- > 0;) {
    if (++profile[k] < sizes[k]) return true;
    profile[k] = 0;
  }
  return false;
}

void ForEachProfile(const std::vector<std::size_t>& sizes,
                    const std::function<void(const ActionProfile&)>& visit) {
  for (std::size_t s : sizes) {
    if (s == 0) return;
  }
  ActionProfile profile(sizes.size(), 0);
  do {
    visit(profile);
  } while (NextProfile(profile, sizes));
}

void validate_game(const GameData& data) {
  ValidateShape(data.players, data.actions);
  const auto sizes = Sizes(data.actions);
  for (const auto& [profile, u] : data.payoffs) {
    if (profile.size() != sizes.size()) {
      throw Error(ErrorCode::kBadDimension,
                  "profile " + ProfileString(profile) + " has " +
                      std::to_string(profile.size()) + " components");
    }
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (profile[k] >= sizes[k]) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "profile " + ProfileString(profile) + ": action " +
                        std::to_string(profile[k]) + " of player " +
                        std::to_string(k) + " out of range");
      }
    }
    CheckPayoffLength(u, sizes.size(), profile);
  }
  ForEachProfile(sizes, [&](const ActionProfile& profile) {
    if (!data.payoffs.contains(profile)) {
      throw Error(ErrorCode::kMissingProfile,
                  "no payoff for profile " + ProfileString(profile));
    }
  });
}

Game::Game(const GameData& data)
    : players_(data.players), actions_(data.actions) {
  validate_game(data);
  strides_.assign(players_.size(), 1);
  for (std::size_t k = players_.size() - 1; k-- > 0;) {
    strides_[k] = strides_[k + 1] * actions_[k + 1].size();
  }
  payoffs_.reserve(strides_[0] * actions_[0].size());
  for (const auto& [profile, u] : data.payoffs) payoffs_.push_back(u);
}

Game::Game(std::vector<std::string> players,
           std::vector<std::vector<std::string>> actions,
           std::vector<PayoffVector> payoffs)
    : players_(std::move(players)),
      actions_(std::move(actions)),
      payoffs_(std::move(payoffs)) {
  ValidateShape(players_, actions_);
  strides_.assign(players_.size(), 1);
  for (std::size_t k = players_.size() - 1; k-- > 0;) {
    strides_[k] = strides_[k + 1] * actions_[k + 1].size();
  }
  const std::size_t expected = strides_[0] * actions_[0].size();
  if (payoffs_.size() < expected) {
    throw Error(ErrorCode::kMissingProfile,
                "no payoff for profile " +
                    ProfileString(profile_at(payoffs_.size())));
  }
  if (payoffs_.size() > expected) {
    throw Error(ErrorCode::kBadDimension,
                "payoff table has " + std::to_string(payoffs_.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  for (std::size_t f = 0; f < payoffs_.size(); ++f) {
    CheckPayoffLength(payoffs_[f], players_.size(), profile_at(f));
  }
}

Game Game::FromFunction(
    std::vector<std::string> players,
    std::vector<std::vector<std::string>> actions,
    const std::function<PayoffVector(const ActionProfile&)>& payoff) {
  ValidateShape(players, actions);
  std::vector<PayoffVector> table;
  ForEachProfile(Sizes(actions), [&](const ActionProfile& profile) {
    table.push_back(payoff(profile));
  });
  return Game(std::move(players), std::move(actions), std::move(table));
}

std::size_t Game::num_actions(PlayerIndex player) const {
  return actions(player).size();
}

std::size_t Game::num_nodes() const {
  std::size_t n = 0;
  for (const auto& labels : actions_) n += labels.size();
  return n;
}

const std::string& Game::player_name(PlayerIndex player) const {
  if (player >= players_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "player " + std::to_string(player));
  }
  return players_[player];
}

const std::vector<std::string>& Game::actions(PlayerIndex player) const {
  if (player >= actions_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "player " + std::to_string(player));
  }
  return actions_[player];
}

const std::string& Game::action_label(PlayerIndex player,
                                      ActionIndex a) const {
  const auto& labels = actions(player);
  if (a >= labels.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "action " + std::to_string(a) + " of player " +
                    std::to_string(player));
  }
  return labels[a];
}

std::optional<PlayerIndex> Game::find_player(const std::string& name) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<ActionIndex> Game::find_action(PlayerIndex player,
                                             const std::string& label) const {
  const auto& labels = actions(player);
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (labels[a] == label) return a;
  }
  return std::nullopt;
}

std::size_t Game::flat_index(const ActionProfile& profile) const {
  if (profile.size() != players_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "profile " + ProfileString(profile) + " has " +
                    std::to_string(profile.size()) + " components, expected " +
                    std::to_string(players_.size()));
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (profile[k] >= actions_[k].size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "profile " + ProfileString(profile) + ": action " +
                      std::to_string(profile[k]) + " of player " +
                      std::to_string(k));
    }
    flat += profile[k] * strides_[k];
  }
  return flat;
}

ActionProfile Game::profile_at(std::size_t flat_index) const {
  ActionProfile profile(players_.size());
  for (std::size_t k = 0; k < players_.size(); ++k) {
    profile[k] = flat_index / strides_[k];
    flat_index %= strides_[k];
  }
  return profile;
}

const PayoffVector& Game::payoff(const ActionProfile& profile) const {
  return payoffs_[flat_index(profile)];
}

const Rational& Game::payoff(const ActionProfile& profile,
                             PlayerIndex player) const {
  const auto& u = payoff(profile);
  if (player >= u.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "player " + std::to_string(player));
  }
  return u[player];
}

GameData Game::ToData() const {
  GameData data{players_, actions_, {}};
  for (std::size_t f = 0; f < payoffs_.size(); ++f) {
    data.payoffs.emplace(profile_at(f), payoffs_[f]);
  }
  return data;
}

void validate_game(const Game& game) { validate_game(game.ToData()); }

void validate_mixed_profile(const Game& game, const MixedProfile& mixed) {
  if (mixed.strategies.size() != game.num_players()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mixed profile covers " +
                    std::to_string(mixed.strategies.size()) +
                    " players, game has " +
                    std::to_string(game.num_players()));
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto& p = mixed.strategies[i];
    if (p.size() != game.num_actions(i)) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "player " + std::to_string(i) + " strategy has " +
                      std::to_string(p.size()) + " entries, expected " +
                      std::to_string(game.num_actions(i)));
    }
    Rational total;
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (p[a].sign() < 0) {
        throw Error(ErrorCode::kInvalidDistribution,
                    "player " + std::to_string(i) + " action " +
                        std::to_string(a) + " has probability " +
                        p[a].ToString());
      }
      total += p[a];
    }
    if (total != Rational(1)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "player " + std::to_string(i) + " probabilities sum to " +
                      total.ToString());
    }
  }
}

PayoffVector expected_utility(const Game& game, const MixedProfile& mixed) {
  validate_mixed_profile(game, mixed);
  PayoffVector total(game.num_players());
  for (std::size_t f = 0; f < game.num_profiles(); ++f) {
    const ActionProfile profile = game.profile_at(f);
    Rational weight(1);
    for (std::size_t k = 0; k < profile.size() && !weight.is_zero(); ++k) {
      weight *= mixed.strategies[k][profile[k]];
    }
    if (weight.is_zero()) continue;
    const auto& u = game.table()[f];
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += weight * u[i];
  }
  return total;
}

MixedStrategy PureStrategy(std::size_t num_actions, ActionIndex action) {
  MixedStrategy p(num_actions);
  p.at(action) = Rational(1);
  return p;
}

MixedProfile PureProfile(const Game& game, const ActionProfile& profile) {
  game.flat_index(profile);
  MixedProfile m;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    m.strategies.push_back(PureStrategy(game.num_actions(k), profile[k]));
  }
  return m;
}

Game restrict_game(const Game& game,
                   const std::vector<std::vector<ActionIndex>>& kept) {
  if (kept.size() != game.num_players()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "restriction covers " + std::to_string(kept.size()) +
                    " players, game has " + std::to_string(game.num_players()));
  }
  std::vector<std::vector<std::string>> labels(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (ActionIndex a : kept[i]) labels[i].push_back(game.action_label(i, a));
  }
  return Game::FromFunction(
      game.players(), std::move(labels), [&](const ActionProfile& sub) {
        ActionProfile full(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i) full[i] = kept[i][sub[i]];
        return game.payoff(full);
      });
}

std::vector<std::vector<Rational>> PayoffMatrix(const Game& game,
                                                PlayerIndex player) {
  RequireTwoPlayers(game, "PayoffMatrix");
  std::vector<std::vector<Rational>> m(
      game.num_actions(0), std::vector<Rational>(game.num_actions(1)));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      m[r][c] = game.payoff({r, c}, player);
    }
  }
  return m;
}

void RequireTwoPlayers(const Game& game, std::string_view operation) {
  if (game.num_players() != 2) {
    throw Error(ErrorCode::kNotTwoPlayer,
                std::string(operation) + " needs a 2-player game, got " +
                    std::to_string(game.num_players()) + " players");
  }
}

}  // namespace pgame
