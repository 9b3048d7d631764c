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

#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "pgame/coco.hpp"
#include "pgame/generate.hpp"
#include "pgame/io.hpp"
#include "test_util.hpp"

namespace pgame {
namespace {

using testing::Fixture;
using testing::Q;
using testing::Qs;
using R = Rational;

Game ZeroSumGame(const Matrix& m) {
  return Game::FromFunction(
      {"row", "col"},
      [&] {
        std::vector<std::vector<std::string>> actions(2);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          actions[0].push_back(std::to_string(r));
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
          actions[1].push_back(std::to_string(c));
        }
        return actions;
      }(),
      [&](const ActionProfile& p) {
        return PayoffVector{m(p[0], p[1]), -m(p[0], p[1])};
      });
}

// Checks the optimal strategies certify `value`: the row strategy earns at
// least it against every column and the column strategy concedes at most
// it against every row.
void ExpectCertified(const Matrix& m, const ZeroSumSolution& s) {
  R row_total, col_total;
  for (const auto& x : s.row_strategy) {
    EXPECT_GE(x, R(0));
    row_total += x;
  }
  for (const auto& y : s.col_strategy) {
    EXPECT_GE(y, R(0));
    col_total += y;
  }
  EXPECT_EQ(row_total, R(1));
  EXPECT_EQ(col_total, R(1));
  std::optional<R> worst_col, best_row;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    R v;
    for (std::size_t r = 0; r < m.rows(); ++r) v += s.row_strategy[r] * m(r, c);
    worst_col = worst_col ? std::min(*worst_col, v) : v;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    R v;
    for (std::size_t c = 0; c < m.cols(); ++c) v += s.col_strategy[c] * m(r, c);
    best_row = best_row ? std::max(*best_row, v) : v;
  }
  EXPECT_EQ(*worst_col, s.value);
  EXPECT_EQ(*best_row, s.value);
}

TEST(CocoTest, BattleOfSexes) {
  const Game g = read_game_file(Fixture("battle_of_sexes.game"));
  const Decomposition d = decompose(g);
  EXPECT_EQ(d.competitive, Matrix({Qs({"1/2", "0"}), Qs({"0", "-1/2"})}));
  EXPECT_EQ(d.cooperative, Matrix({Qs({"3/2", "0"}), Qs({"0", "3/2"})}));

  const CocoSolution s = coco_solution(g);
  EXPECT_EQ(s.cooperative_value, R(3));
  EXPECT_EQ(s.competitive_value, R(0));
  EXPECT_EQ(s.profile, (ActionProfile{0, 0}));
  EXPECT_EQ(s.tied_profiles, (std::vector<ActionProfile>{{0, 0}, {1, 1}}));
  EXPECT_EQ(s.final_payoffs[0], Q("3/2"));
  EXPECT_EQ(s.final_payoffs[1], Q("3/2"));
  EXPECT_EQ(s.side_payment, Q("-1/2"));
}

TEST(CocoTest, PrisonersDilemma) {
  const Game g = read_game_file(Fixture("prisoners.game"));
  const CocoSolution s = coco_solution(g);
  EXPECT_EQ(s.cooperative_value, R(8));
  EXPECT_EQ(s.competitive_value, R(0));
  EXPECT_EQ(s.side_payment, R(0));
  EXPECT_EQ(s.final_payoffs[0], R(4));
  EXPECT_EQ(s.final_payoffs[1], R(4));
  EXPECT_EQ(max_combined_payoff(g).argmax,
            (std::vector<ActionProfile>{{0, 0}}));
}

TEST(CocoTest, Game1BAgreesWithOracle) {
  const Game g = read_game_file(Fixture("game1b.game"));
  const CocoSolution s = coco_solution(g);
  EXPECT_EQ(s.cooperative_value, R(14));
  EXPECT_EQ(s.profile, (ActionProfile{1, 1}));

  const Matrix competitive = decompose(g).competitive;
  const auto eqs = oracle::NashEquilibria(ZeroSumGame(competitive));
  ASSERT_FALSE(eqs.empty());
  const auto& [p, q] = *eqs.begin();
  R oracle_value;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      oracle_value += p[r] * q[c] * competitive(r, c);
    }
  }
  EXPECT_EQ(s.competitive_value, oracle_value);
  EXPECT_EQ(s.competitive_value, Q("3/5"));
  EXPECT_EQ(s.final_payoffs[0], Q("38/5"));
  EXPECT_EQ(s.final_payoffs[1], Q("32/5"));
  EXPECT_EQ(s.side_payment, Q("3/5"));
}

TEST(CocoProperty, DecompositionAndBudget) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = random_game(std::vector<std::size_t>{size(rng), size(rng)},
                               -9, 9, rng);
    const Decomposition d = decompose(g);
    for (std::size_t r = 0; r < g.num_actions(0); ++r) {
      for (std::size_t c = 0; c < g.num_actions(1); ++c) {
        EXPECT_EQ(d.cooperative(r, c) + d.competitive(r, c),
                  g.payoff({r, c}, 0));
        EXPECT_EQ(d.cooperative(r, c) - d.competitive(r, c),
                  g.payoff({r, c}, 1));
      }
    }
    const CocoSolution s = coco_solution(g);
    EXPECT_EQ(s.final_payoffs[0] + s.final_payoffs[1], s.cooperative_value);
    EXPECT_EQ(s.final_payoffs[0] - s.final_payoffs[1],
              R(2) * s.competitive_value);
    EXPECT_EQ(s.final_payoffs[0], g.payoff(s.profile, 0) + s.side_payment);
    EXPECT_EQ(s.final_payoffs[1], g.payoff(s.profile, 1) - s.side_payment);
    ExpectCertified(d.competitive,
                    {s.competitive_value, s.zero_sum_strategies[0],
                     s.zero_sum_strategies[1]});
  }
}

TEST(ZeroSumTest, MatchingPennies) {
  const Matrix m({{R(1), R(-1)}, {R(-1), R(1)}});
  const ZeroSumSolution s = zero_sum_value(m);
  EXPECT_EQ(s.value, R(0));
  EXPECT_EQ(s.row_strategy, Qs({"1/2", "1/2"}));
  EXPECT_EQ(s.col_strategy, Qs({"1/2", "1/2"}));
}

TEST(ZeroSumProperty, ValueAgreesWithEquilibriumOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m(size(rng), size(rng));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = R(num(rng), den(rng));
    }
    const ZeroSumSolution s = zero_sum_value(m);
    ExpectCertified(m, s);
    for (const auto& [p, q] : oracle::NashEquilibria(ZeroSumGame(m))) {
      R v;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) v += p[r] * q[c] * m(r, c);
      }
      EXPECT_EQ(v, s.value);
    }
  }
}

}  // namespace
}  // namespace pgame
