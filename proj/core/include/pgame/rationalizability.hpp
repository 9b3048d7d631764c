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

#ifndef PGAME_RATIONALIZABILITY_HPP
#define PGAME_RATIONALIZABILITY_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "pgame/game.hpp"
#include "pgame/periodicity.hpp"

namespace pgame {

enum class DominanceMode { kPureOnly, kAllowMixedDominators };

struct Elimination {
  std::size_t round = 0;
  PlayerIndex player = 0;
  ActionIndex action = 0;
  // Dominating mixture over the player's actions (pure dominators have a
  // single entry of probability 1).
  std::vector<std::pair<ActionIndex, Rational>> dominator;

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct SurvivorSet {
  ActionSets survivors;
  std::vector<Elimination> trace;
};

// Round-based iterated elimination of strictly dominated actions. In each
// round every action dominated with respect to the current survivors is
// removed at once. With kAllowMixedDominators, dominance by a mixture is
// decided exactly by a zero-sum linear program; opponents' surviving
// profiles are treated jointly (correlated beliefs when N >= 3).
SurvivorSet iesds(const Game& game, DominanceMode mode);

// Dominated (player, action) pairs of the current survivor sets.
using DominatedCandidates = std::vector<std::pair<PlayerIndex, ActionIndex>>;
// Picks which candidate to eliminate next; returns an index into the list.
using EliminationChooser =
    std::function<std::size_t(const DominatedCandidates&)>;

// One-at-a-time elimination in the order chosen by `choose`. Strict
// dominance makes the final survivor set independent of that order.
SurvivorSet iesds(const Game& game, DominanceMode mode,
                  const EliminationChooser& choose);

// Strict dominator of `action` among `survivors[player]`, against the
// surviving opponent profiles; empty when not dominated.
std::vector<std::pair<ActionIndex, Rational>> FindDominator(
    const Game& game, const ActionSets& survivors, PlayerIndex player,
    ActionIndex action, DominanceMode mode);

// Game restricted to the surviving actions.
Game reduced_game(const Game& game, const SurvivorSet& survivors);

// Periodic actions that also survive iesds with mixed dominators.
ActionSets rationalizable_periodic(const Game& game, TiePolicy policy);

struct TypeCount {
  std::size_t periodicity_number = 0;
  std::size_t types = 0;   // 2n
  std::size_t errors = 0;  // 2n - 1
};

// Epistemic type count of a 2-player periodic cycle. Throws
// Error(kNotTwoPlayer) or Error(kAnchorNotOnCycle).
TypeCount type_count(const Cycle& cycle, PlayerIndex anchor_player);

}  // namespace pgame

#endif  // PGAME_RATIONALIZABILITY_HPP
