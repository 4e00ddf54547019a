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

// Fixed-cost inverse fractional knapsack under the weighted l1 norm: only
// profits move, I1 profits go up and I0 profits go down. The optimum is found
// by fixing a threshold t that separates the I1 ratios (>= t) from the I0
// ratios (<= t) and paying, per item, the cheapest integer change that puts
// it on the right side of t.

#ifndef IFKP_INVERSE_L1_H_
#define IFKP_INVERSE_L1_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ifkp/types.h"

namespace ifkp {

// Lower and upper ends of the threshold range. A missing lower end means
// minus infinity (I0 is empty); a missing upper end means plus infinity
// (I1 is empty).
struct FeasibilityBounds {
  std::optional<Rational> lower;  // max over I0 of (p - v_bar) / c
  std::optional<Rational> upper;  // min over I1 of (p + u_bar) / c
  bool feasible = true;
};

// Throws kBudgetMismatch unless sum c_i x*_i == b.
FeasibilityBounds ComputeFeasibilityBounds(const InverseInstance& inv);

struct PresolveResult {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  // Forced profit change per item (u for I1, v for I0); zero outside
  // forced_set.
  std::vector<int64_t> z0;
  // Cap on z per item before presolve: u_bar on I1, v_bar on I0.
  std::vector<int64_t> z_bar;
  Rational base_cost;
  std::vector<int64_t> adjusted_profits;
  std::vector<int64_t> costs;
  std::vector<int> x_star;
  // min adjusted I1 ratio / max adjusted I0 ratio; absent for an empty side.
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::vector<size_t> forced_set;

  int64_t ResidualCap(size_t i) const { return z_bar[i] - z0[i]; }
};

// Lifts I1 ratios below the lower end up to it and pushes I0 ratios above
// the upper end down to it, at the least integer change. Throws
// kInvariantViolation if the instance is infeasible.
PresolveResult Presolve(const InverseInstance& inv);

// Cost of making t a separating threshold over the adjusted profits:
//   sum_{I1, p/c < t} w ceil(c t - p) + sum_{I0, p/c > t} w ceil(p - c t).
// Throws kOutOfRange unless lower <= t <= upper.
Rational CostAt(const PresolveResult& pre, const CostWeights& weights,
                const Rational& t);

enum class ScanMode {
  // Adjusted item ratios inside the scan interval plus its endpoints.
  kPaper,
  // Additionally every threshold where some ceiling term changes value.
  kRefined,
};

// Sorted, deduplicated candidate thresholds inside
// [max(lower, alpha), min(upper, beta)]; empty when that interval is.
std::vector<Rational> CandidateSet(const PresolveResult& pre, ScanMode mode);

struct FifkpResult {
  InverseSolution solution;
  // The minimizing threshold; absent when no scan was needed.
  std::optional<Rational> threshold;
  size_t candidate_count = 0;
};

// Throws kNotL1 or kBudgetMismatch. Cost bounds of the instance are ignored:
// lambda and mu are always zero in the result.
FifkpResult SolveFifkpDetailed(const InverseInstance& inv, ScanMode mode);
InverseSolution SolveFifkp(const InverseInstance& inv, ScanMode mode);

// sum w_i (u_i + v_i) + w_cost_i (lambda_i + mu_i).
Rational L1Objective(const ModificationVector& mods,
                     const CostWeights& weights);

}  // namespace ifkp

#endif  // IFKP_INVERSE_L1_H_
