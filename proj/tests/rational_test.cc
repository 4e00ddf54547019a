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

#include "ifkp/rational.h"

#include <limits>

#include "ifkp/generator.h"
#include "test_util.h"

namespace ifkp {
namespace {

using testing::CodeOf;

TEST(RationalTest, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, 4).ToString(), "3/2");
  EXPECT_EQ(Rational(3, -6).ToString(), "-1/2");
  EXPECT_EQ(Rational(8, 4).ToString(), "2");
  EXPECT_TRUE(Rational(8, 4).is_integer());
  EXPECT_EQ(Rational(0, 5).sign(), 0);
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_EQ(CodeOf([] { Rational(1, 0); }), ErrorCode::kOutOfRange);
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::Parse("7"), Rational(7));
  EXPECT_EQ(Rational::Parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::Parse("123456789012345678901234567890/10").ToString(),
            "12345678901234567890123456789");
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/", "/2", "1/0", "x", "1.5", "1/2/3", " 1"}) {
    EXPECT_EQ(CodeOf([&] { Rational::Parse(bad); }), ErrorCode::kParseError)
        << bad;
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  const int64_t big = std::numeric_limits<int64_t>::max();
  EXPECT_EQ((Rational(big) * Rational(big)) / Rational(big), Rational(big));
}

TEST(RationalTest, CeilAndFloorHandleSigns) {
  EXPECT_EQ(CeilRational(Rational(7, 2)), 4);
  EXPECT_EQ(CeilRational(Rational(-7, 2)), -3);
  EXPECT_EQ(CeilRational(Rational(4)), 4);
  EXPECT_EQ(FloorRational(Rational(7, 2)), 3);
  EXPECT_EQ(FloorRational(Rational(-7, 2)), -4);
}

TEST(RationalTest, CeilIsTheSmallestIntegerAbove) {
  SeededRng rng(11);
  for (int t = 0; t < 10000; ++t) {
    const Rational q(rng.Draw(-1000, 1000), rng.Draw(1, 60));
    const Rational ceil(CeilRational(q));
    EXPECT_GE(ceil, q);
    EXPECT_LT(ceil - Rational(1), q);
    EXPECT_EQ(Rational(FloorRational(q)), -Rational(CeilRational(-q)));
  }
}

TEST(RationalTest, ToInt64ChecksRange) {
  EXPECT_EQ(ToInt64(BigInt(-42)), -42);
  BigInt too_big(std::numeric_limits<int64_t>::max());
  too_big += 1;
  EXPECT_EQ(CodeOf([&] { ToInt64(too_big); }), ErrorCode::kOutOfRange);
}

}  // namespace
}  // namespace ifkp
