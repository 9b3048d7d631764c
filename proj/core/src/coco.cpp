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

#include "pgame/coco.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgame/error.hpp"
#include "pgame/lp.hpp"

namespace pgame {

Decomposition decompose(const Game& bimatrix) {
  RequireTwoPlayers(bimatrix, "decompose");
  const std::size_t m = bimatrix.num_actions(0);
  const std::size_t n = bimatrix.num_actions(1);
  Decomposition d{Matrix(m, n), Matrix(m, n)};
  const Rational half(1, 2);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& u = bimatrix.payoff({r, c});
      d.cooperative(r, c) = (u[0] + u[1]) * half;
      d.competitive(r, c) = (u[0] - u[1]) * half;
    }
  }
  return d;
}

CombinedMaximum max_combined_payoff(const Game& bimatrix) {
  RequireTwoPlayers(bimatrix, "max_combined_payoff");
  CombinedMaximum best;
  for (std::size_t f = 0; f < bimatrix.num_profiles(); ++f) {
    const auto& u = bimatrix.table()[f];
    Rational total = u[0] + u[1];
    if (best.argmax.empty() || total > best.value) {
      best.value = std::move(total);
      best.argmax.assign(1, bimatrix.profile_at(f));
    } else if (total == best.value) {
      best.argmax.push_back(bimatrix.profile_at(f));
    }
  }
  return best;
}

ZeroSumSolution zero_sum_value(const Matrix& payoff) {
  if (payoff.empty()) {
    throw Error(ErrorCode::kBadDimension, "zero-sum matrix is empty");
  }
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();

  // Shift every entry to >= 1 so the value is positive; then the column
  // player's problem is  max sum(y)  s.t.  M y <= 1, y >= 0,  and its
  // optimum is 1 / value.
  Rational lowest = payoff(0, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) lowest = std::min(lowest, payoff(r, c));
  }
  const Rational shift = Rational(1) - lowest;

  LinearProgram lp{Matrix(m, n), std::vector<Rational>(m, Rational(1)),
                   std::vector<Rational>(n, Rational(1))};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) lp.lhs(r, c) = payoff(r, c) + shift;
  }
  const LpSolution sol = SolveLinearProgram(lp);
  const Rational total = sol.objective_value;

  ZeroSumSolution out;
  out.value = Rational(1) / total - shift;
  out.col_strategy.reserve(n);
  for (const auto& y : sol.primal) out.col_strategy.push_back(y / total);
  out.row_strategy.reserve(m);
  for (const auto& x : sol.dual) out.row_strategy.push_back(x / total);

  // Duality certificate: the row strategy secures at least the value against
  // every column, and the column strategy concedes at most the value.
  Rational row_secures;
  for (std::size_t c = 0; c < n; ++c) {
    Rational v;
    for (std::size_t r = 0; r < m; ++r) v += out.row_strategy[r] * payoff(r, c);
    if (c == 0 || v < row_secures) row_secures = v;
  }
  Rational col_concedes;
  for (std::size_t r = 0; r < m; ++r) {
    Rational v;
    for (std::size_t c = 0; c < n; ++c) v += out.col_strategy[c] * payoff(r, c);
    if (r == 0 || v > col_concedes) col_concedes = v;
  }
  if (row_secures != out.value || col_concedes != out.value) {
    throw std::logic_error("zero-sum solution failed the duality check");
  }
  return out;
}

CocoSolution coco_solution(const Game& bimatrix) {
  RequireTwoPlayers(bimatrix, "coco_solution");
  const CombinedMaximum combined = max_combined_payoff(bimatrix);
  const ZeroSumSolution zs = zero_sum_value(decompose(bimatrix).competitive);

  CocoSolution out;
  out.cooperative_value = combined.value;
  out.competitive_value = zs.value;
  out.profile = combined.argmax.front();
  out.tied_profiles = combined.argmax;
  const Rational half_v = combined.value * Rational(1, 2);
  out.final_payoffs = {half_v + zs.value, half_v - zs.value};
  out.side_payment = out.final_payoffs[0] - bimatrix.payoff(out.profile, 0);
  out.zero_sum_strategies = {zs.row_strategy, zs.col_strategy};
  return out;
}

}  // namespace pgame
