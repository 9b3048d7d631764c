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

#include "pgame/linalg.hpp"

#include <algorithm>
#include <utility>

#include "pgame/error.hpp"

namespace pgame {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> RowReduce(Matrix& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(row, c), m(pivot, c));
      }
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void ForEachSubset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    visit(idx);
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::vector<Rational>> Matrix::ToRows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

std::size_t Rank(Matrix m) { return RowReduce(m, m.cols()).size(); }

std::optional<std::vector<Rational>> SolveUnique(
    const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  }
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = RowReduce(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return std::nullopt;  // inconsistent
  }
  if (pivots.size() != n) return std::nullopt;  // free variables
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
  return x;
}

std::vector<std::vector<Rational>> Vertices(const Polytope& p) {
  const std::size_t n = p.dimension;
  const std::size_t m_eq = p.eq_lhs.rows();
  const std::size_t m_le = p.le_lhs.rows();
  std::vector<std::vector<Rational>> found;

  const std::size_t eq_rank = m_eq == 0 ? 0 : Rank(p.eq_lhs);
  if (eq_rank > n) return found;
  const std::size_t needed = n - eq_rank;

  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t r = 0; r < m_eq; ++r) {
      Rational lhs;
      for (std::size_t c = 0; c < n; ++c) lhs += p.eq_lhs(r, c) * x[c];
      if (lhs != p.eq_rhs[r]) return false;
    }
    for (std::size_t r = 0; r < m_le; ++r) {
      Rational lhs;
      for (std::size_t c = 0; c < n; ++c) lhs += p.le_lhs(r, c) * x[c];
      if (lhs > p.le_rhs[r]) return false;
    }
    return true;
  };

  ForEachSubset(m_le, needed, [&](const std::vector<std::size_t>& tight) {
    Matrix a(m_eq + tight.size(), n);
    std::vector<Rational> b(m_eq + tight.size());
    for (std::size_t r = 0; r < m_eq; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = p.eq_lhs(r, c);
      b[r] = p.eq_rhs[r];
    }
    for (std::size_t k = 0; k < tight.size(); ++k) {
      for (std::size_t c = 0; c < n; ++c) {
        a(m_eq + k, c) = p.le_lhs(tight[k], c);
      }
      b[m_eq + k] = p.le_rhs[tight[k]];
    }
    if (auto x = SolveUnique(a, b); x && feasible(*x)) {
      found.push_back(std::move(*x));
    }
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

int AffineDimension(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const std::size_t n = points.front().size();
  Matrix diffs(points.size() - 1, n);
  for (std::size_t k = 1; k < points.size(); ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      diffs(k - 1, c) = points[k][c] - points[0][c];
    }
  }
  return static_cast<int>(Rank(std::move(diffs)));
}

}  // namespace pgame
