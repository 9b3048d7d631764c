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

#include "pgame/mixed_equilibria.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgame/error.hpp"
#include "pgame/linalg.hpp"

namespace pgame {
namespace {

// Payoff of `owner` when `mover` plays `own` and the other player `other`.
const Rational& PayoffWhen(const Game& g, PlayerIndex owner, PlayerIndex mover,
                           ActionIndex own, ActionIndex other) {
  return mover == 0 ? g.payoff({own, other}, owner)
                    : g.payoff({other, own}, owner);
}

const Rational& OwnPayoff(const Game& g, PlayerIndex player, ActionIndex own,
                          ActionIndex other) {
  return PayoffWhen(g, player, player, own, other);
}

std::vector<std::size_t> Members(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask >> k & 1u) out.push_back(k);
  }
  return out;
}

// Mixtures of `mover` supported on `support` under which `owner`'s payoff is
// the common value w for every action of the other player listed in `equal`
// and at most w for the rest. Variables: one probability per support member,
// then w.
Polytope IndifferencePolytope(const Game& g, PlayerIndex mover,
                              PlayerIndex owner,
                              const std::vector<std::size_t>& support,
                              const std::vector<std::size_t>& equal) {
  const std::size_t k = support.size();
  const std::size_t n_other = g.num_actions(1 - mover);
  const std::size_t n_le = (n_other - equal.size()) + k;

  Polytope p;
  p.dimension = k + 1;
  p.eq_lhs = Matrix(1 + equal.size(), k + 1);
  p.eq_rhs.assign(1 + equal.size(), Rational());
  for (std::size_t c = 0; c < k; ++c) p.eq_lhs(0, c) = Rational(1);
  p.eq_rhs[0] = Rational(1);
  for (std::size_t e = 0; e < equal.size(); ++e) {
    for (std::size_t c = 0; c < k; ++c) {
      p.eq_lhs(1 + e, c) =
          PayoffWhen(g, owner, mover, support[c], equal[e]);
    }
    p.eq_lhs(1 + e, k) = Rational(-1);
  }

  p.le_lhs = Matrix(n_le, k + 1);
  p.le_rhs.assign(n_le, Rational());
  std::size_t row = 0;
  for (std::size_t b = 0; b < n_other; ++b) {
    if (std::find(equal.begin(), equal.end(), b) != equal.end()) continue;
    for (std::size_t c = 0; c < k; ++c) {
      p.le_lhs(row, c) = PayoffWhen(g, owner, mover, support[c], b);
    }
    p.le_lhs(row, k) = Rational(-1);
    ++row;
  }
  for (std::size_t c = 0; c < k; ++c) p.le_lhs(row++, c) = Rational(-1);
  return p;
}

MixedStrategy Expand(const std::vector<Rational>& vertex,
                     const std::vector<std::size_t>& support,
                     std::size_t num_actions) {
  MixedStrategy s(num_actions);
  for (std::size_t c = 0; c < support.size(); ++c) s[support[c]] = vertex[c];
  return s;
}

bool IsNash(const Game& g, const MixedProfile& m) {
  const PayoffVector u = expected_utility(g, m);
  for (PlayerIndex i = 0; i < 2; ++i) {
    for (ActionIndex a = 0; a < g.num_actions(i); ++a) {
      MixedProfile dev = m;
      dev.strategies[i] = PureStrategy(g.num_actions(i), a);
      if (expected_utility(g, dev)[i] > u[i]) return false;
    }
  }
  return true;
}

}  // namespace

EquilibriumReport MakeReport(const Game& bimatrix, MixedProfile profile,
                             EquilibriumKind kind) {
  RequireTwoPlayers(bimatrix, "MakeReport");
  EquilibriumReport r;
  const PayoffVector u = expected_utility(bimatrix, profile);
  r.utilities = {u[0], u[1]};
  r.support.resize(2);
  for (PlayerIndex i = 0; i < 2; ++i) {
    for (ActionIndex a = 0; a < profile.strategies[i].size(); ++a) {
      if (profile.strategies[i][a].sign() > 0) r.support[i].push_back(a);
    }
  }
  r.profile = std::move(profile);
  r.kind = kind;
  return r;
}

std::optional<PeriodicMixture> periodic_mixed(const Game& bimatrix,
                                              PlayerIndex player) {
  RequireTwoPlayers(bimatrix, "periodic_mixed");
  if (player > 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "player " + std::to_string(player));
  }
  std::vector<std::size_t> own(bimatrix.num_actions(player));
  for (std::size_t a = 0; a < own.size(); ++a) own[a] = a;
  std::vector<std::size_t> all_other(bimatrix.num_actions(1 - player));
  for (std::size_t b = 0; b < all_other.size(); ++b) all_other[b] = b;

  const auto vertices =
      Vertices(IndifferencePolytope(bimatrix, player, player, own, all_other));
  if (vertices.empty()) return std::nullopt;

  PeriodicMixture out;
  for (const auto& v : vertices) {
    out.vertices.emplace_back(v.begin(), v.end() - 1);
  }
  out.strategy = out.vertices.front();
  out.guaranteed_payoff = vertices.front().back();
  out.dimension = static_cast<std::size_t>(AffineDimension(out.vertices));
  return out;
}

std::optional<EquilibriumReport> periodic_profile(const Game& bimatrix) {
  auto a = periodic_mixed(bimatrix, 0);
  auto b = periodic_mixed(bimatrix, 1);
  if (!a || !b) return std::nullopt;
  return MakeReport(bimatrix, MixedProfile{{a->strategy, b->strategy}},
                    EquilibriumKind::kPeriodic);
}

Rational invariance_check(const Game& bimatrix, PlayerIndex player,
                          const MixedStrategy& strategy) {
  RequireTwoPlayers(bimatrix, "invariance_check");
  if (strategy.size() != bimatrix.num_actions(player)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategy has " + std::to_string(strategy.size()) +
                    " entries, player has " +
                    std::to_string(bimatrix.num_actions(player)) + " actions");
  }
  std::optional<Rational> lo, hi;
  for (ActionIndex b = 0; b < bimatrix.num_actions(1 - player); ++b) {
    Rational value;
    for (ActionIndex a = 0; a < strategy.size(); ++a) {
      value += OwnPayoff(bimatrix, player, a, b) * strategy[a];
    }
    if (!lo || value < *lo) lo = value;
    if (!hi || value > *hi) hi = value;
  }
  return *hi - *lo;
}

std::vector<EquilibriumReport> nash_support_enumeration(
    const Game& bimatrix, const SupportEnumerationOptions& options) {
  RequireTwoPlayers(bimatrix, "nash_support_enumeration");
  const std::size_t m = bimatrix.num_actions(0);
  const std::size_t n = bimatrix.num_actions(1);
  if (m > options.max_actions || n > options.max_actions) {
    throw Error(ErrorCode::kSizeLimit,
                std::to_string(m) + "x" + std::to_string(n) +
                    " game exceeds the support enumeration limit of " +
                    std::to_string(options.max_actions) + " actions");
  }

  std::set<MixedProfile> seen;
  for (unsigned s_mask = 1; s_mask < (1u << m); ++s_mask) {
    const auto rows = Members(s_mask, m);
    for (unsigned t_mask = 1; t_mask < (1u << n); ++t_mask) {
      const auto cols = Members(t_mask, n);
      // Column mixtures that make every row in S a best response.
      const auto q_vertices =
          Vertices(IndifferencePolytope(bimatrix, 1, 0, cols, rows));
      if (q_vertices.empty()) continue;
      const auto p_vertices =
          Vertices(IndifferencePolytope(bimatrix, 0, 1, rows, cols));
      for (const auto& pv : p_vertices) {
        MixedStrategy p = Expand(pv, rows, m);
        for (const auto& qv : q_vertices) {
          seen.insert(MixedProfile{{p, Expand(qv, cols, n)}});
        }
      }
    }
  }

  std::vector<EquilibriumReport> out;
  out.reserve(seen.size());
  for (const auto& profile : seen) {
    if (!IsNash(bimatrix, profile)) {
      throw std::logic_error("support enumeration produced a non-equilibrium");
    }
    out.push_back(MakeReport(bimatrix, profile, EquilibriumKind::kNash));
  }
  return out;
}

}  // namespace pgame
