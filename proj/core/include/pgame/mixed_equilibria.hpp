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

#ifndef PGAME_MIXED_EQUILIBRIA_HPP
#define PGAME_MIXED_EQUILIBRIA_HPP

#include <array>
#include <optional>
#include <vector>

#include "pgame/game.hpp"
#include "pgame/periodicity.hpp"

namespace pgame {

enum class EquilibriumKind { kNash, kPeriodic };

struct EquilibriumReport {
  MixedProfile profile;
  EquilibriumKind kind = EquilibriumKind::kNash;
  std::array<Rational, 2> utilities;
  // Positive-probability actions per player.
  ActionSets support;

  friend bool operator==(const EquilibriumReport&,
                         const EquilibriumReport&) = default;
};

// A mixture of one player that makes that player's own expected payoff the
// same against every pure action of the opponent.
struct PeriodicMixture {
  MixedStrategy strategy;
  // The payoff the mixture guarantees regardless of the opponent's play.
  Rational guaranteed_payoff;
  // Dimension of the set of all such mixtures; 0 when unique.
  std::size_t dimension = 0;
  // Vertices of that set, lexicographically sorted; `strategy` is the first.
  std::vector<MixedStrategy> vertices;
};

// nullopt when no point of the simplex equalizes the payoffs.
std::optional<PeriodicMixture> periodic_mixed(const Game& bimatrix,
                                              PlayerIndex player);

// Both players' periodic mixtures as a report, or nullopt if either is
// infeasible.
std::optional<EquilibriumReport> periodic_profile(const Game& bimatrix);

// max_b U_i(p, b) - min_b U_i(p, b) over the opponent's pure actions.
Rational invariance_check(const Game& bimatrix, PlayerIndex player,
                          const MixedStrategy& strategy);

struct SupportEnumerationOptions {
  std::size_t max_actions = 6;
};

// Extreme Nash equilibria (including pure ones) by exact support
// enumeration. Degenerate support pairs contribute every vertex of their
// solution set. Output is sorted by profile.
std::vector<EquilibriumReport> nash_support_enumeration(
    const Game& bimatrix, const SupportEnumerationOptions& options = {});

// Report for an arbitrary profile of a 2-player game.
EquilibriumReport MakeReport(const Game& bimatrix, MixedProfile profile,
                             EquilibriumKind kind);

}  // namespace pgame

#endif  // PGAME_MIXED_EQUILIBRIA_HPP
