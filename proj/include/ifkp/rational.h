// Copyright 2026 The ifkp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IFKP_RATIONAL_H_
#define IFKP_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ifkp {

using BigInt = mpz_class;

// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1. Every
// constructor and arithmetic result is canonicalized, so equality on the
// representation is equality on the value.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(runtime/explicit)
  Rational(const BigInt& value);  // NOLINT(runtime/explicit)
  Rational(int64_t num, int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "n", "-n" and "n/d" (d != 0). Throws Error(kParseError).
  static Rational Parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "n" for integers, "n/d" otherwise.
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

// Smallest integer >= q, computed as floor((num + den - 1) / den).
BigInt CeilRational(const Rational& q);

// Largest integer <= q.
BigInt FloorRational(const Rational& q);

// Throws Error(kOutOfRange) when the value does not fit.
int64_t ToInt64(const BigInt& value);

}  // namespace ifkp

#endif  // IFKP_RATIONAL_H_
