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

#include "ifkp/oracle.h"

#include <limits>

#include "ifkp/fkp.h"
#include "ifkp/generator.h"
#include "ifkp/inverse_l1.h"
#include "ifkp/inverse_linf.h"
#include "test_util.h"

namespace ifkp {
namespace {

using testing::CodeOf;
using testing::MakeInverse;

TEST(SearchSpaceSizeTest, ProductOfBoundRanges) {
  const InverseInstance inv =
      MakeInverse({{5, 3, 1, 2, 3, 2}, {4, 4}}, {1, 0}, 3);
  EXPECT_EQ(SearchSpaceSize(inv), 2u * 3u * 4u * 3u);
}

TEST(SearchSpaceSizeTest, Saturates) {
  std::vector<testing::ItemSpec> items;
  for (int i = 0; i < 8; ++i) {
    items.push_back({1'000'000'000, 1'000'000'000, 1'000'000, 999'999,
                     1'000'000, 999'999});
  }
  const InverseInstance inv =
      MakeInverse(items, std::vector<int>(8, 1), 8'000'000'000);
  EXPECT_EQ(SearchSpaceSize(inv), std::numeric_limits<uint64_t>::max());
}

TEST(BruteInverseTest, LimitExceededThrows) {
  const InverseInstance inv = testing::FiveItems();
  OracleConfig cfg;
  cfg.max_space = 10;
  EXPECT_EQ(CodeOf([&] { BruteInverse(inv, cfg); }),
            ErrorCode::kOracleLimitExceeded);
}

TEST(BruteInverseTest, FiveItems) {
  const InverseSolution s = BruteInverse(testing::FiveItems());
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(*s.objective, Rational(5, 2));
}

// Raising the I1 item and lowering the I0 item cost the same. The flattened
// vectors are (u1, v1, l1, m1, u2, v2, l2, m2), so lowering item 2 comes
// first in lexicographic order.
TEST(BruteInverseTest, FirstMinimumInLexicographicOrderWins) {
  const InverseInstance inv =
      MakeInverse({{1, 1, 1}, {2, 1, 0, 1}}, {1, 0}, 1);
  const InverseSolution s = BruteInverse(inv);
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(*s.objective, Rational(1));
  EXPECT_EQ(s.mods->u, (std::vector<int64_t>{0, 0}));
  EXPECT_EQ(s.mods->v, (std::vector<int64_t>{0, 1}));
}

TEST(BruteInverseTest, InfeasibleWhenNothingWorks) {
  const InverseInstance inv = MakeInverse({{1, 1}, {5, 1}}, {1, 0}, 1);
  EXPECT_FALSE(BruteInverse(inv).optimal());
  EXPECT_FALSE(DecomposedInverse(inv).optimal());
}

TEST(DecomposedInverseTest, AgreesWithBruteForceOnBothNorms) {
  int compared = 0;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    GenOptions opts;
    opts.n = 1 + seed % 4;
    opts.seed = seed;
    opts.max_bound = 2;
    opts.kind = seed % 2 ? GenKind::kUniform : GenKind::kFixedCost;
    const InverseInstance inv = GenerateRandom(opts);
    for (Norm norm : {Norm::kL1, Norm::kLInf}) {
      InverseInstance probe = inv;
      probe.norm = norm;
      if (SearchSpaceSize(probe) > 300'000) continue;
      ++compared;
      const InverseSolution brute = BruteInverse(probe);
      const InverseSolution fast = DecomposedInverse(probe);
      ASSERT_EQ(brute.optimal(), fast.optimal()) << "seed " << seed;
      if (!brute.optimal()) continue;
      EXPECT_EQ(*brute.objective, *fast.objective) << "seed " << seed;
      EXPECT_TRUE(CheckOptimality(ApplyModifications(probe, *fast.mods),
                                  probe.x_star)
                      .optimal());
    }
  }
  EXPECT_GT(compared, 500);
}

TEST(DecomposedInverseTest, ReportedObjectiveMatchesMods) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GenOptions opts;
    opts.n = 1 + seed % 6;
    opts.seed = seed;
    opts.kind = GenKind::kUniform;
    InverseInstance inv = GenerateRandom(opts);
    for (Norm norm : {Norm::kL1, Norm::kLInf}) {
      inv.norm = norm;
      const InverseSolution s = DecomposedInverse(inv);
      if (!s.optimal()) continue;
      const Rational recomputed =
          norm == Norm::kL1 ? L1Objective(*s.mods, inv.weights)
                            : Rational(LinfObjective(*s.mods));
      EXPECT_EQ(recomputed, *s.objective);
    }
  }
}

TEST(BruteFkpTest, RejectsLargeInstances) {
  FkpInstance inst{std::vector<Item>(9, Item{1, 1}), 3};
  EXPECT_EQ(CodeOf([&] { BruteFkp(inst); }), ErrorCode::kTooLarge);
}

TEST(BruteFkpTest, SmallExample) {
  const FkpResult r = BruteFkp({{{6, 2}, {10, 5}, {12, 3}}, 6});
  EXPECT_EQ(r.objective, Rational(20));
}

}  // namespace
}  // namespace ifkp
