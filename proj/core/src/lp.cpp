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

#include "pgame/lp.hpp"

#include <optional>
#include <stdexcept>

#include "pgame/error.hpp"

namespace pgame {

LpSolution SolveLinearProgram(const LinearProgram& lp) {
  const std::size_t m = lp.lhs.rows();
  const std::size_t n = lp.lhs.cols();
  if (lp.rhs.size() != m || lp.objective.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "linear program shape");
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (lp.rhs[r].sign() < 0) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "right-hand side row " + std::to_string(r) + " is negative");
    }
  }

  // Columns: n structural, m slack, then the right-hand side.
  const std::size_t width = n + m + 1;
  Matrix t(m + 1, width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t(r, c) = lp.lhs(r, c);
    t(r, n + r) = Rational(1);
    t(r, width - 1) = lp.rhs[r];
  }
  for (std::size_t c = 0; c < n; ++c) t(m, c) = -lp.objective[c];

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  LpSolution out;
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (t(m, c).sign() < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) break;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, *entering).sign() <= 0) continue;
      Rational ratio = t(r, width - 1) / t(r, *entering);
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) throw std::domain_error("linear program is unbounded");

    const std::size_t pr = *leaving;
    const Rational inv = Rational(1) / t(pr, *entering);
    for (std::size_t c = 0; c < width; ++c) t(pr, c) *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == pr || t(r, *entering).is_zero()) continue;
      const Rational factor = t(r, *entering);
      for (std::size_t c = 0; c < width; ++c) t(r, c) -= factor * t(pr, c);
    }
    basis[pr] = *entering;
    ++out.pivots;
  }

  out.primal.assign(n, Rational());
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) out.primal[basis[r]] = t(r, width - 1);
  }
  out.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) out.dual[r] = t(m, n + r);
  out.objective_value = t(m, width - 1);
  return out;
}

}  // namespace pgame
