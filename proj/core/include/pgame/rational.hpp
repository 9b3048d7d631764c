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

#ifndef PGAME_RATIONAL_HPP
#define PGAME_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pgame {

// Exact fraction with arbitrary-precision numerator and denominator.
//
// Always kept in canonical form: denominator > 0 and gcd(|num|, den) = 1.
// Division by zero throws Error(kDivisionByZero).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "7", "-3/4", "0.125", "-2.5". Throws Error(kParseError).
  static Rational Parse(std::string_view text);

  // "p" when the denominator is 1, otherwise "p/q".
  std::string ToString() const;
  // Decimal approximation for display only.
  double ToDouble() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  bool is_integer() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  std::size_t Hash() const;

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

Rational Abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace pgame

template <>
struct std::hash<pgame::Rational> {
  std::size_t operator()(const pgame::Rational& x) const { return x.Hash(); }
};

#endif  // PGAME_RATIONAL_HPP
