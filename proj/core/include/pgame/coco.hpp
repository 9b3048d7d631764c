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

#ifndef PGAME_COCO_HPP
#define PGAME_COCO_HPP

#include <array>
#include <vector>

#include "pgame/game.hpp"
#include "pgame/linalg.hpp"

namespace pgame {

// Cooperative (half-sum) and competitive (half-difference) parts of a
// bimatrix game: cooperative + competitive = A, cooperative - competitive = B.
struct Decomposition {
  Matrix cooperative;
  Matrix competitive;
};

Decomposition decompose(const Game& bimatrix);

struct CombinedMaximum {
  Rational value;
  // Every profile attaining `value`, in row-major order.
  std::vector<ActionProfile> argmax;
};

// Maximum of A + B over pure profiles.
CombinedMaximum max_combined_payoff(const Game& bimatrix);

struct ZeroSumSolution {
  Rational value;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
};

// Minimax value of the zero-sum game in which the row player receives
// `payoff(r, c)`, with optimal strategies for both sides, from an exact
// simplex. Row maximin and column minimax are checked to coincide.
ZeroSumSolution zero_sum_value(const Matrix& payoff);

struct CocoSolution {
  Rational cooperative_value;  // V#
  Rational competitive_value;  // V^S
  ActionProfile profile;       // first maximizer of A + B
  std::vector<ActionProfile> tied_profiles;
  // Paid by the column player to the row player (negative: the reverse).
  Rational side_payment;
  std::array<Rational, 2> final_payoffs;
  std::array<MixedStrategy, 2> zero_sum_strategies;
};

CocoSolution coco_solution(const Game& bimatrix);

}  // namespace pgame

#endif  // PGAME_COCO_HPP
