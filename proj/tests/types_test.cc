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

#include "ifkp/types.h"

#include <limits>

#include "test_util.h"

namespace ifkp {
namespace {

using testing::CodeOf;
using testing::MakeInverse;

InverseInstance Small() {
  return MakeInverse({{5, 2, 1, 1, 1, 1}, {3, 4, 2, 2, 2, 2}}, {1, 0}, 2);
}

TEST(TypesTest, OnesAndZerosSplitIndices) {
  const BinarySolution x{{1, 0, 0, 1}};
  EXPECT_EQ(x.Ones(), (std::vector<size_t>{0, 3}));
  EXPECT_EQ(x.Zeros(), (std::vector<size_t>{1, 2}));
}

TEST(TypesTest, FractionalCount) {
  const FractionalSolution x{{Rational(1), Rational(1, 2), Rational(0)}};
  EXPECT_EQ(x.FractionalCount(), 1u);
}

TEST(TypesTest, CompareRatiosIsExactAtInt64Extremes) {
  const int64_t m = std::numeric_limits<int64_t>::max();
  EXPECT_EQ(CompareRatios(m, m - 1, m - 1, m - 2), -1);
  EXPECT_EQ(CompareRatios(2, 4, 1, 2), 0);
  EXPECT_EQ(CompareRatios(Item{3, 1}, Item{5, 2}), 1);
  EXPECT_EQ(RatioOf({6, 4}), Rational(3, 2));
}

TEST(TypesTest, SelectedCostAndLengthCheck) {
  const InverseInstance inv = Small();
  EXPECT_EQ(SelectedCost(inv.base, inv.x_star), 2);
  EXPECT_EQ(CodeOf([&] { SelectedCost(inv.base, BinarySolution{{1}}); }),
            ErrorCode::kLengthMismatch);
}

TEST(TypesTest, ValidationRejectsBadInstances) {
  EXPECT_NO_THROW(ValidateInverseInstance(Small()));
  auto expect_invalid = [](InverseInstance inv) {
    EXPECT_EQ(CodeOf([&] { ValidateInverseInstance(inv); }),
              ErrorCode::kInvariantViolation);
  };
  InverseInstance inv = Small();
  inv.base.items[0].cost = 0;
  expect_invalid(inv);
  inv = Small();
  inv.base.budget = 0;
  expect_invalid(inv);
  inv = Small();
  inv.x_star.values[1] = 2;
  expect_invalid(inv);
  inv = Small();
  inv.bounds.v_bar[0] = 5;  // would drive p to 0
  expect_invalid(inv);
  inv = Small();
  inv.bounds.mu_bar[0] = 2;  // would drive c to 0
  expect_invalid(inv);
  inv = Small();
  inv.bounds.u_bar[1] = -1;
  expect_invalid(inv);
  inv = Small();
  inv.weights.w_cost[0] = Rational(-1, 2);
  expect_invalid(inv);
  inv = Small();
  inv.bounds.u_bar[0] = std::numeric_limits<int64_t>::max();
  expect_invalid(inv);
  inv = Small();
  inv.weights.w.pop_back();
  expect_invalid(inv);
  inv = Small();
  inv.base.items.clear();
  expect_invalid(inv);
}

TEST(TypesTest, ApplyModificationsComputesNewInstance) {
  const InverseInstance inv = Small();
  ModificationVector m = ModificationVector::Zeros(2);
  m.u[0] = 1;
  m.mu[0] = 1;
  m.v[1] = 2;
  m.lambda[1] = 2;
  const FkpInstance out = ApplyModifications(inv, m);
  EXPECT_EQ(out.items[0], (Item{6, 1}));
  EXPECT_EQ(out.items[1], (Item{1, 6}));
  EXPECT_EQ(out.budget, 2);
}

TEST(TypesTest, ApplyModificationsChecksLengthThenBoundsThenPositivity) {
  InverseInstance inv = Small();
  ModificationVector m = ModificationVector::Zeros(2);
  m.u.pop_back();
  m.v[0] = 99;
  EXPECT_EQ(CodeOf([&] { ApplyModifications(inv, m); }),
            ErrorCode::kLengthMismatch);

  m = ModificationVector::Zeros(2);
  m.v[0] = 2;
  EXPECT_EQ(CodeOf([&] { ApplyModifications(inv, m); }),
            ErrorCode::kBoundViolation);
  m.v[0] = -1;
  EXPECT_EQ(CodeOf([&] { ApplyModifications(inv, m); }),
            ErrorCode::kBoundViolation);

  // Bounds are validated against p and c, so positivity can only fail on an
  // instance that skipped validation.
  inv.bounds.v_bar[0] = 5;
  m = ModificationVector::Zeros(2);
  m.v[0] = 5;
  EXPECT_EQ(CodeOf([&] { ApplyModifications(inv, m); }),
            ErrorCode::kNonPositiveResult);
}

TEST(TypesTest, ModificationVectorHelpers) {
  ModificationVector m = ModificationVector::Zeros(3);
  EXPECT_TRUE(m.IsZero());
  EXPECT_EQ(m.size(), 3u);
  m.lambda[2] = 1;
  EXPECT_FALSE(m.IsZero());
  EXPECT_EQ(NormName(Norm::kL1), "l1");
  EXPECT_EQ(NormName(Norm::kLInf), "linf");
  EXPECT_EQ(CostWeights::Uniform(2, Rational(3)).w_cost[1], Rational(3));
}

}  // namespace
}  // namespace ifkp
