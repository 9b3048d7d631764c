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

// Brute-force reference implementations used to check the library. They
// share only Rational and the Game accessors with the code under test.

#ifndef PGAME_TESTS_ORACLES_HPP
#define PGAME_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pgame/game.hpp"
#include "pgame/rational.hpp"

namespace oracle {

using pgame::ActionProfile;
using pgame::Game;
using pgame::Rational;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

struct Reduced {
  std::size_t rank = 0;
  bool consistent = true;
  // Set only when the system has exactly one solution.
  std::optional<Vec> unique;
};

// Gauss-Jordan elimination of [a | b].
inline Reduced RowReduce(Mat a, Vec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a[k][c].is_zero()) continue;
      const Rational f = a[k][c];
      for (std::size_t j = 0; j < cols; ++j) a[k][j] -= f * a[r][j];
      b[k] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  Reduced out;
  out.rank = r;
  for (std::size_t k = r; k < rows; ++k) {
    if (!b[k].is_zero()) out.consistent = false;
  }
  if (out.consistent && r == cols) {
    Vec x(cols);
    for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
    out.unique = x;
  }
  return out;
}

// First maximizer (row-major) of `player`'s payoff over profiles in which
// the player plays `action`, together with the number of maximizers.
inline std::pair<ActionProfile, std::size_t> ArgmaxOpponents(
    const Game& g, std::size_t player, std::size_t action) {
  std::optional<Rational> best;
  ActionProfile first;
  std::size_t ties = 0;
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    const ActionProfile p = g.profile_at(k);
    if (p[player] != action) continue;
    const Rational& u = g.payoff(p)[player];
    if (!best || u > *best) {
      best = u;
      first = p;
      ties = 1;
    } else if (u == *best) {
      ++ties;
    }
  }
  return {first, ties};
}

using NodeKey = std::pair<std::size_t, std::size_t>;  // (player, action)

inline std::set<std::pair<NodeKey, NodeKey>> Edges(const Game& g) {
  std::set<std::pair<NodeKey, NodeKey>> edges;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    for (std::size_t a = 0; a < g.num_actions(i); ++a) {
      const ActionProfile target = ArgmaxOpponents(g, i, a).first;
      for (std::size_t j = 0; j < g.num_players(); ++j) {
        if (j != i) edges.insert({{i, a}, {j, target[j]}});
      }
    }
  }
  return edges;
}

// Nodes that can reach themselves in one or more steps.
inline std::set<NodeKey> OnCycle(const Game& g) {
  std::map<NodeKey, std::vector<NodeKey>> adj;
  for (const auto& [from, to] : Edges(g)) adj[from].push_back(to);
  std::set<NodeKey> result;
  for (const auto& [start, _] : adj) {
    std::set<NodeKey> seen;
    std::vector<NodeKey> stack = adj[start];
    while (!stack.empty()) {
      const NodeKey n = stack.back();
      stack.pop_back();
      if (n == start) {
        result.insert(start);
        break;
      }
      if (!seen.insert(n).second) continue;
      for (const NodeKey& m : adj[n]) stack.push_back(m);
    }
  }
  return result;
}

inline Mat PayoffRows(const Game& g, std::size_t player) {
  Mat m(g.num_actions(0), Vec(g.num_actions(1)));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      m[r][c] = g.payoff({r, c})[player];
    }
  }
  return m;
}

inline Mat Transpose(const Mat& m) {
  Mat t(m.empty() ? 0 : m[0].size(), Vec(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  }
  return t;
}

struct Indifference {
  bool consistent = false;
  // Unique solution (strategy, payoff) when the system pins one down.
  std::optional<std::pair<Vec, Rational>> unique;
};

// Mixtures p of the player whose own payoffs are `own[own_action][opp]`
// with sum_a own[a][b] p_a equal for every b and sum p = 1 (signs not
// imposed).
inline Indifference SolveIndifference(const Mat& own) {
  const std::size_t m = own.size();
  const std::size_t n = own[0].size();
  Mat a;
  Vec b;
  for (std::size_t col = 0; col < n; ++col) {
    Vec row(m + 1);
    for (std::size_t r = 0; r < m; ++r) row[r] = own[r][col];
    row[m] = -1;
    a.push_back(row);
    b.push_back(0);
  }
  Vec sum(m + 1, Rational(1));
  sum[m] = 0;
  a.push_back(sum);
  b.push_back(1);
  const Reduced red = RowReduce(a, b);
  Indifference out;
  out.consistent = red.consistent;
  if (red.unique) {
    Vec p(red.unique->begin(), red.unique->begin() + m);
    out.unique = std::make_pair(p, red.unique->back());
  }
  return out;
}

struct LabeledVertex {
  Vec point;
  std::set<std::size_t> labels;
};

// Vertices of { z >= 0, M z <= 1 } (M has all entries positive), labels are
// the tight constraints: `zero_offset + k` for z_k = 0 and
// `row_offset + j` for row j of M.
inline std::vector<LabeledVertex> LabeledVertices(const Mat& m,
                                                  std::size_t zero_offset,
                                                  std::size_t row_offset) {
  const std::size_t dim = m[0].size();
  const std::size_t total = dim + m.size();
  std::vector<LabeledVertex> out;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + dim, true);
  std::sort(pick.begin(), pick.end());
  do {
    Mat a;
    Vec b;
    for (std::size_t k = 0; k < total; ++k) {
      if (!pick[k]) continue;
      if (k < dim) {
        Vec row(dim);
        row[k] = 1;
        a.push_back(row);
        b.push_back(0);
      } else {
        a.push_back(m[k - dim]);
        b.push_back(1);
      }
    }
    const Reduced red = RowReduce(a, b);
    if (!red.unique) continue;
    const Vec& z = *red.unique;
    bool feasible = true;
    LabeledVertex v{z, {}};
    for (std::size_t k = 0; k < dim; ++k) {
      if (z[k].sign() < 0) feasible = false;
      if (z[k].is_zero()) v.labels.insert(zero_offset + k);
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      Rational s;
      for (std::size_t k = 0; k < dim; ++k) s += m[j][k] * z[k];
      if (s > Rational(1)) feasible = false;
      if (s == Rational(1)) v.labels.insert(row_offset + j);
    }
    if (!feasible) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& w) {
      return w.point == v.point;
    });
    if (!seen) out.push_back(v);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Extreme Nash equilibria of a bimatrix game as (p, q) pairs, from
// completely labeled vertex pairs of the best-response polytopes.
inline std::set<std::pair<Vec, Vec>> NashEquilibria(const Game& g) {
  Mat a = PayoffRows(g, 0);
  Mat b = PayoffRows(g, 1);
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  auto shift = [](Mat& x) {
    Rational lo = x[0][0];
    for (const auto& row : x) {
      for (const auto& v : row) lo = std::min(lo, v);
    }
    for (auto& row : x) {
      for (auto& v : row) v = v - lo + Rational(1);
    }
  };
  shift(a);
  shift(b);
  // P = { x >= 0 : B^T x <= 1 }, labels 0..m-1 for x = 0, m.. for columns.
  // Q = { y >= 0 : A y <= 1 }, labels 0..m-1 for rows, m.. for y = 0.
  const auto px = LabeledVertices(Transpose(b), 0, m);
  const auto qy = LabeledVertices(a, m, 0);
  auto normalize = [](const Vec& v) {
    Rational s;
    for (const auto& x : v) s += x;
    Vec out = v;
    for (auto& x : out) x /= s;
    return out;
  };
  std::set<std::pair<Vec, Vec>> result;
  for (const auto& x : px) {
    if (std::all_of(x.point.begin(), x.point.end(),
                    [](const Rational& r) { return r.is_zero(); })) {
      continue;
    }
    for (const auto& y : qy) {
      if (std::all_of(y.point.begin(), y.point.end(),
                      [](const Rational& r) { return r.is_zero(); })) {
        continue;
      }
      std::set<std::size_t> all = x.labels;
      all.insert(y.labels.begin(), y.labels.end());
      if (all.size() == m + n) {
        result.insert({normalize(x.point), normalize(y.point)});
      }
    }
  }
  return result;
}

// Pure saddle points of a zero-sum matrix (row maximizes): entries that are
// the minimum of their row and the maximum of their column.
inline std::vector<std::pair<std::size_t, std::size_t>> PureSaddles(
    const Mat& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      bool row_min = true;
      bool col_max = true;
      for (std::size_t k = 0; k < m[r].size(); ++k) {
        if (m[r][k] < m[r][c]) row_min = false;
      }
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k][c] > m[r][c]) col_max = false;
      }
      if (row_min && col_max) out.emplace_back(r, c);
    }
  }
  return out;
}

// True iff no player gains by a pure deviation from (p, q).
inline bool IsBimatrixNash(const Game& g, const Vec& p, const Vec& q) {
  const Mat a = PayoffRows(g, 0);
  const Mat b = PayoffRows(g, 1);
  Rational ua, ub;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (std::size_t c = 0; c < q.size(); ++c) {
      ua += p[r] * q[c] * a[r][c];
      ub += p[r] * q[c] * b[r][c];
    }
  }
  for (std::size_t r = 0; r < p.size(); ++r) {
    Rational dev;
    for (std::size_t c = 0; c < q.size(); ++c) dev += q[c] * a[r][c];
    if (dev > ua) return false;
  }
  for (std::size_t c = 0; c < q.size(); ++c) {
    Rational dev;
    for (std::size_t r = 0; r < p.size(); ++r) dev += p[r] * b[r][c];
    if (dev > ub) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // PGAME_TESTS_ORACLES_HPP
