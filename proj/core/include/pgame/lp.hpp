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

#ifndef PGAME_LP_HPP
#define PGAME_LP_HPP

#include <vector>

#include "pgame/linalg.hpp"
#include "pgame/rational.hpp"

namespace pgame {

// maximize objective . x  subject to  lhs x <= rhs,  x >= 0,
// with rhs >= 0 so that the origin is a feasible starting basis.
struct LinearProgram {
  Matrix lhs;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

struct LpSolution {
  std::vector<Rational> primal;  // x
  std::vector<Rational> dual;    // one multiplier per constraint row
  Rational objective_value;
  std::size_t pivots = 0;
};

// Exact tableau simplex with Bland's smallest-index rule, which rules out
// cycling on degenerate problems. Throws Error(kDimensionMismatch) on shape
// errors or a negative right-hand side and std::domain_error if the program
// is unbounded.
LpSolution SolveLinearProgram(const LinearProgram& lp);

}  // namespace pgame

#endif  // PGAME_LP_HPP
