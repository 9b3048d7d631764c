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
#include <unordered_set>

#include "pgame/rational.hpp"
#include "test_util.hpp"

namespace pgame {
namespace {

using testing::ErrorOf;
using testing::Q;

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  EXPECT_EQ(Rational(10, 5).ToString(), "2");
  EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(RationalTest, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Q("48/49"), Rational(48, 49));
  EXPECT_EQ(Q("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Q("0.125"), Rational(1, 8));
  EXPECT_EQ(Q("-2.5"), Rational(-5, 2));
  EXPECT_EQ(Q("+7"), Rational(7));
  EXPECT_EQ(Q("4/6"), Rational(2, 3));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(Q("010"), Rational(10));
  EXPECT_EQ(Q("010/012"), Rational(5, 6));
  EXPECT_EQ(Q("0.0625"), Rational(1, 16));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "abc", "1.2.3", "1/0", "--1", "1e5", " 4/6", "0x10"}) {
    EXPECT_EQ(ErrorOf([&] { Rational::Parse(bad); }), ErrorCode::kParseError)
        << bad;
  }
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_EQ(ErrorOf([] { Rational(1) / Rational(0); }),
            ErrorCode::kDivisionByZero);
  EXPECT_EQ(ErrorOf([] { Rational(1, 0); }), ErrorCode::kDivisionByZero);
}

TEST(RationalTest, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_EQ(Abs(Rational(-5, 3)), Rational(5, 3));
}

TEST(RationalTest, LargeValuesDoNotOverflow) {
  Rational x(INT64_MAX);
  x *= x;
  x *= x;
  EXPECT_EQ(x / Rational(INT64_MAX) / Rational(INT64_MAX) /
                Rational(INT64_MAX),
            Rational(INT64_MAX));
  EXPECT_EQ(Rational(INT64_MIN).ToString(), "-9223372036854775808");
}

TEST(RationalTest, OrderingAndHashAgreeWithEquality) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4),
                                   Rational(3, 6)};
  EXPECT_EQ(set.size(), 1u);
}

TEST(RationalTest, ToStringParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational x(num(rng), den(rng));
    EXPECT_EQ(Rational::Parse(x.ToString()), x);
  }
}

TEST(RationalTest, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  auto draw = [&] {
    std::int64_t q = 0;
    while (q == 0) q = d(rng);
    return Rational(d(rng), q);
  };
  for (int i = 0; i < 300; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a + b - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}

}  // namespace
}  // namespace pgame
