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

#ifndef IFKP_FKP_H_
#define IFKP_FKP_H_

#include <optional>
#include <span>
#include <utility>

#include "ifkp/types.h"

namespace ifkp {

struct FkpResult {
  FractionalSolution solution;
  Rational objective;
};

// Greedy fractional knapsack: items in decreasing profit/cost order (lower
// index first on ties), whole items while they fit, then the fraction of the
// next item that exhausts the budget.
FkpResult SolveGreedy(const FkpInstance& inst);

// Runs the greedy fill in a caller-supplied item order. Shared by the
// forward solver and the permutation oracle.
FkpResult GreedyFillInOrder(const FkpInstance& inst,
                            std::span<const size_t> order);

enum class OptimalityVerdict { kOptimal, kBudgetMismatch, kRatioViolation };

struct OptimalityReport {
  OptimalityVerdict verdict = OptimalityVerdict::kOptimal;
  // (i in I1, j in I0) with ratio_i < ratio_j; present iff kRatioViolation.
  // i is the lowest-index argmin over I1, j the lowest-index argmax over I0.
  std::optional<std::pair<size_t, size_t>> witness;
  BigInt lhs_sum;

  bool optimal() const { return verdict == OptimalityVerdict::kOptimal; }
};

// Checks, in this order, (i) sum c_i x*_i == b and (ii) the smallest ratio
// over I1 is at least the largest ratio over I0. Budget equality is strict,
// also when the whole item set fits. Throws kLengthMismatch.
OptimalityReport CheckOptimality(const FkpInstance& inst,
                                 const BinarySolution& x_star);

}  // namespace ifkp

#endif  // IFKP_FKP_H_
