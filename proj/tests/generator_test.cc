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

#include "ifkp/generator.h"

#include <set>

#include "ifkp/inverse_l1.h"
#include "ifkp/inverse_linf.h"
#include "test_util.h"

namespace ifkp {
namespace {

using testing::CodeOf;

TEST(SeededRngTest, StaysInRangeAndCoversIt) {
  SeededRng rng(1);
  std::set<int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const int64_t x = rng.Draw(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(rng.Draw(5, 5), 5);
}

// The first output of mt19937_64 seeded with 5489 is fixed by the standard;
// a range of 2^32 divides 2^64, so no draw is rejected.
TEST(SeededRngTest, FollowsTheDocumentedDrawRule) {
  SeededRng rng(5489);
  const uint64_t first = 14514284786278117030ULL;
  EXPECT_EQ(rng.Draw(0, (int64_t{1} << 32) - 1),
            static_cast<int64_t>(first % (uint64_t{1} << 32)));
}

TEST(GenerateRandomTest, Reproducible) {
  GenOptions opts;
  opts.seed = 77;
  opts.n = 6;
  opts.kind = GenKind::kUniform;
  EXPECT_EQ(GenerateRandom(opts), GenerateRandom(opts));
  GenOptions other = opts;
  other.seed = 78;
  EXPECT_NE(GenerateRandom(opts), GenerateRandom(other));
}

TEST(GenerateRandomTest, FixedCostShape) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GenOptions opts;
    opts.seed = seed;
    opts.n = 1 + seed % 7;
    const InverseInstance inv = GenerateRandom(opts);
    EXPECT_EQ(inv.norm, Norm::kL1);
    EXPECT_FALSE(inv.x_star.Ones().empty());
    EXPECT_EQ(inv.bounds.lambda_bar, std::vector<int64_t>(opts.n, 0));
    EXPECT_EQ(inv.bounds.mu_bar, std::vector<int64_t>(opts.n, 0));
    EXPECT_EQ(SelectedCost(inv.base, inv.x_star), inv.base.budget);
    for (size_t i = 0; i < opts.n; ++i) {
      EXPECT_LE(inv.base.items[i].profit, opts.max_value);
      EXPECT_LE(inv.bounds.u_bar[i], opts.max_bound);
    }
  }
}

TEST(GenerateRandomTest, UniformCoversAllThreeCases) {
  int counts[3] = {0, 0, 0};
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenOptions opts;
    opts.seed = seed;
    opts.kind = GenKind::kUniform;
    const InverseInstance inv = GenerateRandom(opts);
    EXPECT_EQ(inv.norm, Norm::kLInf);
    ++counts[ClassifyCase(inv).kind];
  }
  for (int c : counts) EXPECT_GT(c, 50);
}

TEST(GenerateRandomTest, PlantedInstancesAreFeasible) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GenOptions opts;
    opts.seed = seed;
    opts.n = 50;
    opts.max_value = 100;
    opts.max_bound = 10;
    opts.planted = true;
    EXPECT_TRUE(SolveFifkp(GenerateRandom(opts), ScanMode::kPaper).optimal());
    opts.kind = GenKind::kUniform;
    const InverseInstance inv = GenerateRandom(opts);
    if (ClassifyCase(inv).kind == CaseKind::kEqual) {
      EXPECT_TRUE(SolveLinf(inv).optimal()) << "seed " << seed;
    }
  }
}

TEST(GenerateRandomTest, RejectsBadOptions) {
  GenOptions opts;
  opts.n = 0;
  EXPECT_EQ(CodeOf([&] { GenerateRandom(opts); }),
            ErrorCode::kInvariantViolation);
}

TEST(GeneratePartitionTest, EvenTotalWithinRange) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const PartitionInstance pp = GeneratePartition(1 + seed % 8, 6, seed);
    int64_t total = 0;
    for (int64_t a : pp.values) {
      EXPECT_GE(a, 1);
      EXPECT_LE(a, 6);
      total += a;
    }
    EXPECT_EQ(total, 2 * pp.half_sum);
  }
  EXPECT_EQ(CodeOf([] { GeneratePartition(3, 1, 0); }),
            ErrorCode::kInvalidPartition);
}

}  // namespace
}  // namespace ifkp
