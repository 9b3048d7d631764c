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

#ifndef PGAME_LINALG_HPP
#define PGAME_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pgame/rational.hpp"

namespace pgame {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix Transposed() const;
  std::vector<std::vector<Rational>> ToRows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t Rank(Matrix m);

// Solution of A x = b when it exists and is unique; nullopt otherwise.
std::optional<std::vector<Rational>> SolveUnique(const Matrix& a,
                                                 const std::vector<Rational>& b);

// A bounded polyhedron { x : eq_lhs x = eq_rhs, le_lhs x <= le_rhs }.
struct Polytope {
  Matrix eq_lhs;
  std::vector<Rational> eq_rhs;
  Matrix le_lhs;
  std::vector<Rational> le_rhs;
  std::size_t dimension = 0;  // number of variables
};

// All vertices, lexicographically sorted and deduplicated. Found by trying
// every set of inequalities that, together with the equalities, pins down a
// unique point; intended for the small systems that arise in desk-scale
// games. The polytope must be bounded.
std::vector<std::vector<Rational>> Vertices(const Polytope& polytope);

// Dimension of the affine hull of a point set (-1 for an empty set).
int AffineDimension(const std::vector<std::vector<Rational>>& points);

}  // namespace pgame

#endif  // PGAME_LINALG_HPP
