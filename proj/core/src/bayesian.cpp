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

#include "pgame/bayesian.hpp"

#include <set>

#include "pgame/error.hpp"

namespace pgame {
namespace {

void RequireUnique(const std::vector<std::string>& labels,
                   const std::string& what) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!seen.insert(labels[k]).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  what + " " + std::to_string(k) + " reuses label '" +
                      labels[k] + "'");
    }
  }
}

TypeProfile Opponents(const TypeProfile& types, PlayerIndex player) {
  TypeProfile out;
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (k != player) out.push_back(types[k]);
  }
  return out;
}

std::string TypeName(const BayesianGame& bg, PlayerIndex i, TypeIndex t) {
  return bg.players()[i] + ":" + bg.types(i)[t];
}

void RequireAllTypesPositive(const BayesianGame& bg) {
  for (PlayerIndex i = 0; i < bg.num_players(); ++i) {
    for (TypeIndex t = 0; t < bg.num_types(i); ++t) {
      if (bg.type_marginal(i, t).is_zero()) {
        throw Error(ErrorCode::kZeroProbabilityType,
                    "type " + TypeName(bg, i, t) + " has prior probability 0");
      }
    }
  }
}

}  // namespace

BayesianGame::BayesianGame(BayesianGameData data) : data_(std::move(data)) {
  const std::size_t n = data_.players.size();
  if (data_.thetas.empty()) {
    throw Error(ErrorCode::kBadDimension, "no states (thetas) given");
  }
  RequireUnique(data_.thetas, "theta");
  if (data_.types.size() != n) {
    throw Error(ErrorCode::kBadDimension,
                "type lists given for " + std::to_string(data_.types.size()) +
                    " players, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (data_.types[i].empty()) {
      throw Error(ErrorCode::kBadDimension,
                  "player " + std::to_string(i) + " has no types");
    }
    RequireUnique(data_.types[i], "player " + std::to_string(i) + " type");
  }
  if (data_.payoffs.size() != data_.thetas.size()) {
    throw Error(ErrorCode::kMissingProfile,
                "payoff tables given for " +
                    std::to_string(data_.payoffs.size()) + " states, expected " +
                    std::to_string(data_.thetas.size()));
  }
  for (const auto& table : data_.payoffs) {
    states_.emplace_back(data_.players, data_.actions, table);
  }

  Rational total;
  for (const auto& e : data_.prior) {
    if (e.theta >= data_.thetas.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "prior entry names theta " + std::to_string(e.theta));
    }
    if (e.types.size() != n) {
      throw Error(ErrorCode::kBadDimension,
                  "prior entry type profile has " +
                      std::to_string(e.types.size()) + " components");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e.types[i] >= data_.types[i].size()) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "prior entry names type " + std::to_string(e.types[i]) +
                        " of player " + std::to_string(i));
      }
    }
    if (e.probability.sign() < 0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "negative prior probability " + e.probability.ToString());
    }
    if (!prior_.emplace(std::make_pair(e.theta, e.types), e.probability)
             .second) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "duplicate prior entry for theta '" +
                      data_.thetas[e.theta] + "'");
    }
    total += e.probability;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kInvalidDistribution,
                "prior sums to " + total.ToString() + ", expected 1");
  }
}

std::size_t BayesianGame::num_types(PlayerIndex player) const {
  return types(player).size();
}

const std::vector<std::string>& BayesianGame::actions(
    PlayerIndex player) const {
  return states_.front().actions(player);
}

const std::vector<std::string>& BayesianGame::types(PlayerIndex player) const {
  if (player >= data_.types.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "player " + std::to_string(player));
  }
  return data_.types[player];
}

const Game& BayesianGame::state_game(ThetaIndex theta) const {
  if (theta >= states_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "theta " + std::to_string(theta));
  }
  return states_[theta];
}

Rational BayesianGame::prior_of(ThetaIndex theta,
                                const TypeProfile& types) const {
  auto it = prior_.find({theta, types});
  return it == prior_.end() ? Rational() : it->second;
}

Rational BayesianGame::type_marginal(PlayerIndex player, TypeIndex type) const {
  if (type >= num_types(player)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "type " + std::to_string(type) + " of player " +
                    std::to_string(player));
  }
  Rational total;
  for (const auto& [key, p] : prior_) {
    if (key.second[player] == type) total += p;
  }
  return total;
}

InterimBelief conditional_belief(const BayesianGame& bg, PlayerIndex player,
                                 TypeIndex type) {
  const Rational marginal = bg.type_marginal(player, type);
  if (marginal.is_zero()) {
    throw Error(ErrorCode::kZeroProbabilityType,
                "type " + TypeName(bg, player, type) +
                    " has prior probability 0");
  }
  InterimBelief out{player, type, {}};
  for (const auto& [key, p] : bg.prior()) {
    if (key.second[player] != type || p.is_zero()) continue;
    out.mass[{key.first, Opponents(key.second, player)}] += p / marginal;
  }
  return out;
}

std::vector<Rational> first_order_belief(const BayesianGame& bg,
                                         PlayerIndex player, TypeIndex type) {
  std::vector<Rational> out(bg.num_thetas());
  for (const auto& [key, p] : conditional_belief(bg, player, type).mass) {
    out[key.first] += p;
  }
  return out;
}

SecondOrderBelief second_order_belief(const BayesianGame& bg,
                                      PlayerIndex player, TypeIndex type) {
  const InterimBelief belief = conditional_belief(bg, player, type);
  SecondOrderBelief out;
  std::map<TypeProfile, std::size_t> class_of;
  for (const auto& [key, p] : belief.mass) {
    const TypeProfile& opp = key.second;
    auto found = class_of.find(opp);
    if (found == class_of.end()) {
      std::vector<std::vector<Rational>> beliefs;
      std::size_t k = 0;
      for (PlayerIndex j = 0; j < bg.num_players(); ++j) {
        if (j == player) continue;
        beliefs.push_back(first_order_belief(bg, j, opp[k++]));
      }
      std::size_t idx = out.classes.size();
      for (std::size_t c = 0; c < out.classes.size(); ++c) {
        if (out.classes[c].opponent_beliefs == beliefs) {
          idx = c;
          break;
        }
      }
      if (idx == out.classes.size()) {
        out.classes.push_back({std::move(beliefs), {}});
      }
      out.classes[idx].members.push_back(opp);
      found = class_of.emplace(opp, idx).first;
    }
    out.mass[{key.first, found->second}] += p;
  }
  return out;
}

Game ex_ante_game(const BayesianGame& bg, const ExAnteOptions& options) {
  const std::size_t n = bg.num_players();
  // Strategy s of player i is a base-|A_i| numeral, one digit per type, the
  // first type most significant.
  std::vector<std::vector<std::string>> labels(n);
  std::vector<std::vector<std::vector<ActionIndex>>> plans(n);
  std::size_t total_profiles = 1;
  for (PlayerIndex i = 0; i < n; ++i) {
    const std::size_t na = bg.actions(i).size();
    const std::size_t nt = bg.num_types(i);
    std::size_t count = 1;
    for (std::size_t t = 0; t < nt; ++t) {
      if (count > options.max_profiles / na) {
        count = options.max_profiles + 1;
        break;
      }
      count *= na;
    }
    if (count > options.max_profiles ||
        total_profiles > options.max_profiles / count) {
      throw Error(ErrorCode::kSizeLimit,
                  "ex-ante game exceeds " +
                      std::to_string(options.max_profiles) + " profiles");
    }
    total_profiles *= count;
    ForEachProfile(std::vector<std::size_t>(nt, na),
                   [&](const ActionProfile& plan) {
                     plans[i].push_back(plan);
                   });
  }
  for (PlayerIndex i = 0; i < n; ++i) {
    bool separated = false;
    for (int attempt = 0; attempt < 2 && labels[i].empty(); ++attempt) {
      std::set<std::string> seen;
      std::vector<std::string> out;
      for (const auto& plan : plans[i]) {
        std::string label;
        for (std::size_t t = 0; t < plan.size(); ++t) {
          if (separated && t) label += '|';
          label += bg.actions(i)[plan[t]];
        }
        seen.insert(label);
        out.push_back(std::move(label));
      }
      if (seen.size() == out.size()) {
        labels[i] = std::move(out);
      } else {
        separated = true;  // multi-character labels collided
      }
    }
  }

  return Game::FromFunction(
      bg.players(), labels, [&](const ActionProfile& strategies) {
        PayoffVector u(n);
        ActionProfile actions(n);
        for (const auto& [key, p] : bg.prior()) {
          if (p.is_zero()) continue;
          for (PlayerIndex i = 0; i < n; ++i) {
            actions[i] = plans[i][strategies[i]][key.second[i]];
          }
          const auto& v = bg.state_game(key.first).payoff(actions);
          for (PlayerIndex i = 0; i < n; ++i) u[i] += p * v[i];
        }
        return u;
      });
}

Game interim_game(const BayesianGame& bg) {
  RequireAllTypesPositive(bg);
  const std::size_t n = bg.num_players();
  std::vector<std::pair<PlayerIndex, TypeIndex>> slots;
  std::vector<std::vector<std::size_t>> slot_of(n);
  for (PlayerIndex i = 0; i < n; ++i) {
    for (TypeIndex t = 0; t < bg.num_types(i); ++t) {
      slot_of[i].push_back(slots.size());
      slots.emplace_back(i, t);
    }
  }

  std::set<std::string> bare;
  bool unique = true;
  for (const auto& [i, t] : slots) unique &= bare.insert(bg.types(i)[t]).second;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> actions;
  std::vector<InterimBelief> beliefs;
  for (const auto& [i, t] : slots) {
    names.push_back(unique ? bg.types(i)[t] : TypeName(bg, i, t));
    actions.push_back(bg.actions(i));
    beliefs.push_back(conditional_belief(bg, i, t));
  }

  return Game::FromFunction(
      std::move(names), std::move(actions), [&](const ActionProfile& choice) {
        PayoffVector u(slots.size());
        ActionProfile played(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
          const auto [i, t] = slots[s];
          for (const auto& [key, p] : beliefs[s].mass) {
            std::size_t k = 0;
            for (PlayerIndex j = 0; j < n; ++j) {
              const TypeIndex tj = j == i ? t : key.second[k++];
              played[j] = choice[slot_of[j][tj]];
            }
            u[s] += p * bg.state_game(key.first).payoff(played, i);
          }
        }
        return u;
      });
}

std::vector<ConditionedGame> interim_correlated_games(const BayesianGame& bg) {
  RequireAllTypesPositive(bg);
  std::map<TypeProfile, std::map<ThetaIndex, Rational>> by_profile;
  for (const auto& [key, p] : bg.prior()) {
    if (!p.is_zero()) by_profile[key.second][key.first] += p;
  }
  std::vector<ConditionedGame> out;
  for (const auto& [types, weights] : by_profile) {
    Rational mass;
    for (const auto& [theta, p] : weights) mass += p;
    const Game& first = bg.state_game(0);
    Game game = Game::FromFunction(
        first.players(), bg.data().actions, [&](const ActionProfile& a) {
          PayoffVector u(bg.num_players());
          for (const auto& [theta, p] : weights) {
            const auto& v = bg.state_game(theta).payoff(a);
            for (std::size_t i = 0; i < u.size(); ++i) u[i] += p / mass * v[i];
          }
          return u;
        });
    out.push_back({types, mass, std::move(game)});
  }
  return out;
}

Game interim_correlated_game(const BayesianGame& bg,
                             const std::optional<TypeProfile>& types) {
  auto games = interim_correlated_games(bg);
  if (!types) {
    if (games.size() != 1) {
      throw Error(ErrorCode::kAmbiguousTypeProfile,
                  std::to_string(games.size()) +
                      " type profiles have positive probability; choose one");
    }
    return std::move(games.front().game);
  }
  if (types->size() != bg.num_players()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "type profile needs one type per player");
  }
  for (PlayerIndex i = 0; i < types->size(); ++i) {
    if ((*types)[i] >= bg.num_types(i)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "type " + std::to_string((*types)[i]) + " of player " +
                      std::to_string(i) + " out of range");
    }
  }
  for (auto& g : games) {
    if (g.types == *types) return std::move(g.game);
  }
  throw Error(ErrorCode::kZeroProbabilityType,
              "the requested type profile has prior probability 0");
}

}  // namespace pgame
