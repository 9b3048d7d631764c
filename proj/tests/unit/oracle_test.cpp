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

#include "oracles/oracles.hpp"
#include "test_util.hpp"

namespace pgame {
namespace {

using testing::Bimatrix;
using testing::Qs;

TEST(OracleTest, RowReduce) {
  const auto r = oracle::RowReduce({{Rational(2), Rational(1)},
                                    {Rational(1), Rational(3)}},
                                   {Rational(3), Rational(5)});
  ASSERT_TRUE(r.unique);
  EXPECT_EQ(*r.unique, Qs({"4/5", "7/5"}));
  const auto s = oracle::RowReduce({{Rational(1), Rational(1)},
                                    {Rational(1), Rational(1)}},
                                   {Rational(1), Rational(2)});
  EXPECT_FALSE(s.consistent);
  EXPECT_EQ(s.rank, 1u);
}

TEST(OracleTest, NashOfIntroGame) {
  const Game g = Bimatrix({{2, 0}, {0, 1}}, {{1, 0}, {0, 1}});
  const auto eqs = oracle::NashEquilibria(g);
  const std::set<std::pair<oracle::Vec, oracle::Vec>> expected = {
      {Qs({"0", "1"}), Qs({"0", "1"})},
      {Qs({"1/2", "1/2"}), Qs({"1/3", "2/3"})},
      {Qs({"1", "0"}), Qs({"1", "0"})}};
  EXPECT_EQ(eqs, expected);
}

TEST(OracleTest, NashOfMatchingPennies) {
  const Game g = Bimatrix({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const auto eqs = oracle::NashEquilibria(g);
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs.begin()->first, Qs({"1/2", "1/2"}));
  EXPECT_TRUE(oracle::IsBimatrixNash(g, Qs({"1/2", "1/2"}), Qs({"1/2", "1/2"})));
  EXPECT_FALSE(oracle::IsBimatrixNash(g, Qs({"1", "0"}), Qs({"1", "0"})));
}

TEST(OracleTest, PureSaddles) {
  const oracle::Mat m = {Qs({"3", "1"}), Qs({"4", "2"})};
  EXPECT_EQ(oracle::PureSaddles(m),
            (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}}));
  EXPECT_TRUE(oracle::PureSaddles({Qs({"1", "-1"}), Qs({"-1", "1"})}).empty());
}

TEST(OracleTest, IndifferenceOfBattleOfSexes) {
  const auto r = oracle::SolveIndifference({Qs({"2", "0"}), Qs({"0", "1"})});
  ASSERT_TRUE(r.unique);
  EXPECT_EQ(r.unique->first, Qs({"1/3", "2/3"}));
  EXPECT_EQ(r.unique->second, Rational(2, 3));
}

}  // namespace
}  // namespace pgame
