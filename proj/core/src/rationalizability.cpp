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

#include "pgame/rationalizability.hpp"

#include <algorithm>

#include "pgame/coco.hpp"
#include "pgame/error.hpp"
#include "pgame/linalg.hpp"

namespace pgame {
namespace {

// Opponent profiles drawn from the survivor sets, as full profiles with the
// own slot left at 0.
std::vector<ActionProfile> SurvivingOpponentProfiles(const ActionSets& sets,
                                                     PlayerIndex player) {
  std::vector<std::size_t> sizes(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    sizes[k] = k == player ? 1 : sets[k].size();
  }
  std::vector<ActionProfile> out;
  ForEachProfile(sizes, [&](const ActionProfile& idx) {
    ActionProfile profile(idx.size(), 0);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k != player) profile[k] = sets[k][idx[k]];
    }
    out.push_back(std::move(profile));
  });
  return out;
}

DominatedCandidates AllDominated(const Game& game, const ActionSets& sets,
                                 DominanceMode mode,
                                 std::vector<std::vector<std::pair<
                                     ActionIndex, Rational>>>* dominators) {
  DominatedCandidates out;
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (ActionIndex a : sets[i]) {
      auto dom = FindDominator(game, sets, i, a, mode);
      if (dom.empty()) continue;
      out.emplace_back(i, a);
      if (dominators) dominators->push_back(std::move(dom));
    }
  }
  return out;
}

void Remove(ActionSets& sets, PlayerIndex player, ActionIndex action) {
  auto& v = sets[player];
  v.erase(std::remove(v.begin(), v.end(), action), v.end());
}

ActionSets AllActions(const Game& game) {
  ActionSets sets(game.num_players());
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (ActionIndex a = 0; a < game.num_actions(i); ++a) sets[i].push_back(a);
  }
  return sets;
}

}  // namespace

std::vector<std::pair<ActionIndex, Rational>> FindDominator(
    const Game& game, const ActionSets& survivors, PlayerIndex player,
    ActionIndex action, DominanceMode mode) {
  std::vector<ActionIndex> rivals;
  for (ActionIndex k : survivors[player]) {
    if (k != action) rivals.push_back(k);
  }
  if (rivals.empty()) return {};
  const auto opponents = SurvivingOpponentProfiles(survivors, player);

  // gain(k, c) = U(k, c) - U(action, c)
  Matrix gain(rivals.size(), opponents.size());
  for (std::size_t c = 0; c < opponents.size(); ++c) {
    ActionProfile profile = opponents[c];
    profile[player] = action;
    const Rational base = game.payoff(profile, player);
    for (std::size_t k = 0; k < rivals.size(); ++k) {
      profile[player] = rivals[k];
      gain(k, c) = game.payoff(profile, player) - base;
    }
  }

  for (std::size_t k = 0; k < rivals.size(); ++k) {
    bool strict = true;
    for (std::size_t c = 0; c < opponents.size() && strict; ++c) {
      strict = gain(k, c).sign() > 0;
    }
    if (strict) return {{rivals[k], Rational(1)}};
  }
  if (mode == DominanceMode::kPureOnly || rivals.size() < 2) return {};

  // A mixture dominates strictly iff the zero-sum game `gain` has a positive
  // value for the row (mixing) player.
  const ZeroSumSolution zs = zero_sum_value(gain);
  if (zs.value.sign() <= 0) return {};
  std::vector<std::pair<ActionIndex, Rational>> mixture;
  for (std::size_t k = 0; k < rivals.size(); ++k) {
    if (!zs.row_strategy[k].is_zero()) {
      mixture.emplace_back(rivals[k], zs.row_strategy[k]);
    }
  }
  return mixture;
}

SurvivorSet iesds(const Game& game, DominanceMode mode) {
  SurvivorSet out{AllActions(game), {}};
  for (std::size_t round = 1;; ++round) {
    std::vector<std::vector<std::pair<ActionIndex, Rational>>> dominators;
    const auto dominated =
        AllDominated(game, out.survivors, mode, &dominators);
    if (dominated.empty()) break;
    for (std::size_t k = 0; k < dominated.size(); ++k) {
      out.trace.push_back({round, dominated[k].first, dominated[k].second,
                           std::move(dominators[k])});
    }
    for (const auto& [player, action] : dominated) {
      Remove(out.survivors, player, action);
    }
  }
  return out;
}

SurvivorSet iesds(const Game& game, DominanceMode mode,
                  const EliminationChooser& choose) {
  SurvivorSet out{AllActions(game), {}};
  for (std::size_t step = 1;; ++step) {
    std::vector<std::vector<std::pair<ActionIndex, Rational>>> dominators;
    const auto dominated =
        AllDominated(game, out.survivors, mode, &dominators);
    if (dominated.empty()) break;
    const std::size_t pick = choose(dominated);
    if (pick >= dominated.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "elimination chooser returned " + std::to_string(pick));
    }
    const auto [player, action] = dominated[pick];
    out.trace.push_back({step, player, action, std::move(dominators[pick])});
    Remove(out.survivors, player, action);
  }
  return out;
}

Game reduced_game(const Game& game, const SurvivorSet& survivors) {
  return restrict_game(game, survivors.survivors);
}

ActionSets rationalizable_periodic(const Game& game, TiePolicy policy) {
  const ActionSets periodic = periodic_actions(game, policy);
  const SurvivorSet rational =
      iesds(game, DominanceMode::kAllowMixedDominators);
  ActionSets out(game.num_players());
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    std::set_intersection(periodic[i].begin(), periodic[i].end(),
                          rational.survivors[i].begin(),
                          rational.survivors[i].end(),
                          std::back_inserter(out[i]));
  }
  return out;
}

TypeCount type_count(const Cycle& cycle, PlayerIndex anchor_player) {
  if (cycle.num_players != 2) {
    throw Error(ErrorCode::kNotTwoPlayer,
                "type counting needs a 2-player cycle, got " +
                    std::to_string(cycle.num_players) + " players");
  }
  TypeCount out;
  out.periodicity_number = periodicity_number(cycle, anchor_player);
  out.types = 2 * out.periodicity_number;
  out.errors = out.types - 1;
  return out;
}

}  // namespace pgame
