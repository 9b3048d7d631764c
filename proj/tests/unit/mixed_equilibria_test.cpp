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
#include <set>

#include "oracles/oracles.hpp"
#include "pgame/error.hpp"
#include "pgame/generate.hpp"
#include "pgame/io.hpp"
#include "pgame/mixed_equilibria.hpp"
#include "test_util.hpp"

namespace pgame {
namespace {

using testing::Bimatrix;
using testing::ErrorOf;
using testing::Fixture;
using testing::Qs;

std::set<std::pair<oracle::Vec, oracle::Vec>> AsSet(
    const std::vector<EquilibriumReport>& reports) {
  std::set<std::pair<oracle::Vec, oracle::Vec>> out;
  for (const auto& r : reports) {
    out.insert({r.profile.strategies[0], r.profile.strategies[1]});
  }
  return out;
}

TEST(NashTest, IntroGame) {
  const Game g = read_game_file(Fixture("intro.game"));
  const auto eqs = nash_support_enumeration(g);
  ASSERT_EQ(eqs.size(), 3u);
  const auto mixed = std::find_if(eqs.begin(), eqs.end(), [](const auto& r) {
    return r.support[0].size() == 2;
  });
  ASSERT_NE(mixed, eqs.end());
  EXPECT_EQ(mixed->profile.strategies[0], Qs({"1/2", "1/2"}));
  EXPECT_EQ(mixed->profile.strategies[1], Qs({"1/3", "2/3"}));
  EXPECT_EQ(mixed->utilities[0], Rational(2, 3));
  EXPECT_EQ(mixed->utilities[1], Rational(1, 2));
  EXPECT_EQ(mixed->kind, EquilibriumKind::kNash);
}

TEST(NashTest, BattleOfSexes) {
  const Game g = read_game_file(Fixture("battle_of_sexes.game"));
  const auto eqs = nash_support_enumeration(g);
  EXPECT_EQ(AsSet(eqs), oracle::NashEquilibria(g));
  bool found = false;
  for (const auto& r : eqs) {
    if (r.profile.strategies[0] == Qs({"2/3", "1/3"})) {
      found = true;
      EXPECT_EQ(r.profile.strategies[1], Qs({"1/3", "2/3"}));
      EXPECT_EQ(r.utilities[0], Rational(2, 3));
      EXPECT_EQ(r.utilities[1], Rational(2, 3));
    }
  }
  EXPECT_TRUE(found);
}

TEST(NashTest, Game1BHasOnlyThePureEquilibrium) {
  const Game g = read_game_file(Fixture("game1b.game"));
  const auto eqs = nash_support_enumeration(g);
  EXPECT_EQ(AsSet(eqs), oracle::NashEquilibria(g));
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs[0].support, (ActionSets{{1}, {1}}));
  EXPECT_EQ(eqs[0].utilities[0], Rational(7));
  EXPECT_EQ(eqs[0].utilities[1], Rational(7));
}

TEST(NashTest, DegenerateGameYieldsExtremePoints) {
  // B is indifferent everywhere: every q is a best reply, A picks a row.
  const Game g = Bimatrix({{1, 0}, {0, 1}}, {{0, 0}, {0, 0}});
  const auto eqs = nash_support_enumeration(g);
  EXPECT_EQ(AsSet(eqs), oracle::NashEquilibria(g));
  for (const auto& r : eqs) {
    EXPECT_TRUE(oracle::IsBimatrixNash(g, r.profile.strategies[0],
                                       r.profile.strategies[1]));
  }
}

TEST(NashTest, Limits) {
  std::mt19937_64 rng(1);
  const Game big = random_game(std::vector<std::size_t>{7, 2}, -9, 9, rng);
  EXPECT_EQ(ErrorOf([&] { nash_support_enumeration(big); }),
            ErrorCode::kSizeLimit);
  EXPECT_NO_THROW(nash_support_enumeration(big, {.max_actions = 7}));
  const Game three = random_game(std::vector<std::size_t>{2, 2, 2}, -9, 9, rng);
  EXPECT_EQ(ErrorOf([&] { nash_support_enumeration(three); }),
            ErrorCode::kNotTwoPlayer);
  EXPECT_EQ(ErrorOf([&] { periodic_mixed(three, 0); }),
            ErrorCode::kNotTwoPlayer);
}

TEST(PeriodicMixedTest, IntroGame) {
  const Game g = read_game_file(Fixture("intro.game"));
  const auto a = periodic_mixed(g, 0);
  const auto b = periodic_mixed(g, 1);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->strategy, Qs({"1/3", "2/3"}));
  EXPECT_EQ(b->strategy, Qs({"1/2", "1/2"}));
  EXPECT_EQ(a->dimension, 0u);
  EXPECT_EQ(a->guaranteed_payoff, Rational(2, 3));
  EXPECT_EQ(b->guaranteed_payoff, Rational(1, 2));
  const auto profile = periodic_profile(g);
  ASSERT_TRUE(profile);
  EXPECT_EQ(profile->kind, EquilibriumKind::kPeriodic);
  EXPECT_EQ(profile->utilities[0], Rational(2, 3));
  EXPECT_EQ(profile->utilities[1], Rational(1, 2));
}

TEST(PeriodicMixedTest, Game1BRowOnlyFeasibleForA) {
  const Game g = read_game_file(Fixture("game1b.game"));
  const auto a = periodic_mixed(g, 0);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->strategy, Qs({"20/99", "10/33", "20/99", "29/99"}));
  EXPECT_EQ(invariance_check(g, 0, a->strategy), Rational(0));
  EXPECT_FALSE(periodic_mixed(g, 1).has_value());
  EXPECT_FALSE(periodic_profile(g).has_value());

  const auto oa = oracle::SolveIndifference(oracle::PayoffRows(g, 0));
  ASSERT_TRUE(oa.unique);
  EXPECT_EQ(oa.unique->first, a->strategy);
  const auto ob = oracle::SolveIndifference(
      oracle::Transpose(oracle::PayoffRows(g, 1)));
  ASSERT_TRUE(ob.unique);
  EXPECT_TRUE(std::any_of(ob.unique->first.begin(), ob.unique->first.end(),
                          [](const Rational& x) { return x.sign() < 0; }));
}

TEST(PeriodicMixedTest, ConstantPayoffsGiveWholeSimplex) {
  const Game g = Bimatrix({{3, 3}, {3, 3}, {3, 3}}, {{0, 1}, {0, 1}, {0, 1}});
  const auto a = periodic_mixed(g, 0);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->dimension, 2u);
  EXPECT_EQ(a->vertices.size(), 3u);
  EXPECT_EQ(a->strategy, a->vertices.front());
  EXPECT_EQ(a->guaranteed_payoff, Rational(3));
}

TEST(PeriodicMixedTest, InvarianceCheckMeasuresSpread) {
  const Game g = read_game_file(Fixture("intro.game"));
  EXPECT_EQ(invariance_check(g, 0, Qs({"1", "0"})), Rational(2));
  EXPECT_EQ(invariance_check(g, 1, Qs({"1/2", "1/2"})), Rational(0));
}

class MixedProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MixedProperty, NashMatchesVertexLabelingOracle) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    // Narrow payoff ranges make degenerate games common.
    const std::int64_t range = trial % 2 == 0 ? 2 : 9;
    const Game g = random_game(std::vector<std::size_t>{size(rng), size(rng)},
                               -range, range, rng);
    const auto eqs = nash_support_enumeration(g);
    EXPECT_FALSE(eqs.empty());
    EXPECT_EQ(AsSet(eqs), oracle::NashEquilibria(g));
    for (const auto& r : eqs) {
      EXPECT_TRUE(oracle::IsBimatrixNash(g, r.profile.strategies[0],
                                         r.profile.strategies[1]));
      const PayoffVector u = expected_utility(g, r.profile);
      EXPECT_EQ(r.utilities[0], u[0]);
      EXPECT_EQ(r.utilities[1], u[1]);
    }
  }
}

TEST_P(MixedProperty, PeriodicMixtureMatchesIndifferenceOracle) {
  std::mt19937_64 rng(GetParam() + 100);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = random_game(std::vector<std::size_t>{size(rng), size(rng)},
                               -9, 9, rng);
    for (PlayerIndex i = 0; i < 2; ++i) {
      oracle::Mat own = oracle::PayoffRows(g, i);
      if (i == 1) own = oracle::Transpose(own);
      const auto expected = oracle::SolveIndifference(own);
      const auto got = periodic_mixed(g, i);
      if (got) {
        const auto& p = got->strategy;
        Rational total;
        for (const auto& x : p) {
          EXPECT_GE(x, Rational(0));
          total += x;
        }
        EXPECT_EQ(total, Rational(1));
        EXPECT_EQ(invariance_check(g, i, p), Rational(0));
        for (const auto& v : got->vertices) {
          EXPECT_EQ(invariance_check(g, i, v), Rational(0));
        }
        EXPECT_TRUE(expected.consistent);
      }
      if (expected.unique) {
        const bool nonnegative =
            std::all_of(expected.unique->first.begin(),
                        expected.unique->first.end(),
                        [](const Rational& x) { return x.sign() >= 0; });
        ASSERT_EQ(got.has_value(), nonnegative);
        if (got) {
          EXPECT_EQ(got->strategy, expected.unique->first);
          EXPECT_EQ(got->guaranteed_payoff, expected.unique->second);
          EXPECT_EQ(got->dimension, 0u);
        }
      } else if (!expected.consistent) {
        EXPECT_FALSE(got.has_value());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MixedProperty, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace pgame
