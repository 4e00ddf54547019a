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

#include "ifkp/fkp.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ifkp/error.h"

namespace ifkp {

FkpResult GreedyFillInOrder(const FkpInstance& inst,
                            std::span<const size_t> order) {
  FkpResult result{{std::vector<Rational>(inst.size(), Rational(0))},
                   Rational(0)};
  BigInt remaining = static_cast<long>(inst.budget);
  for (size_t i : order) {
    if (remaining <= 0) break;
    const Item& item = inst.items[i];
    const BigInt cost = static_cast<long>(item.cost);
    if (cost <= remaining) {
      result.solution.values[i] = Rational(1);
      result.objective += Rational(item.profit);
      remaining -= cost;
    } else {
      const Rational fraction(remaining, cost);
      result.solution.values[i] = fraction;
      result.objective += fraction * Rational(item.profit);
      remaining = 0;
    }
  }
  return result;
}

FkpResult SolveGreedy(const FkpInstance& inst) {
  std::vector<size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return CompareRatios(inst.items[a], inst.items[b]) > 0;
  });
  return GreedyFillInOrder(inst, order);
}

OptimalityReport CheckOptimality(const FkpInstance& inst,
                                 const BinarySolution& x_star) {
  OptimalityReport report;
  report.lhs_sum = SelectedCost(inst, x_star);
  if (report.lhs_sum != static_cast<long>(inst.budget)) {
    report.verdict = OptimalityVerdict::kBudgetMismatch;
    return report;
  }
  std::optional<size_t> min_one;
  std::optional<size_t> max_zero;
  for (size_t i = 0; i < inst.size(); ++i) {
    if (x_star.values[i] == 1) {
      if (!min_one || CompareRatios(inst.items[i], inst.items[*min_one]) < 0) {
        min_one = i;
      }
    } else if (!max_zero ||
               CompareRatios(inst.items[i], inst.items[*max_zero]) > 0) {
      max_zero = i;
    }
  }
  if (min_one && max_zero &&
      CompareRatios(inst.items[*min_one], inst.items[*max_zero]) < 0) {
    report.verdict = OptimalityVerdict::kRatioViolation;
    report.witness = std::make_pair(*min_one, *max_zero);
  }
  return report;
}

}  // namespace ifkp
