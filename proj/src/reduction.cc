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

#include "ifkp/reduction.h"

#include <string>

#include "ifkp/error.h"

namespace ifkp {

namespace {

void ValidatePartition(const PartitionInstance& pp) {
  if (pp.values.empty()) {
    throw Error(ErrorCode::kInvalidPartition, "no values");
  }
  __int128 total = 0;
  for (int64_t a : pp.values) {
    if (a < 1) throw Error(ErrorCode::kInvalidPartition, "values must be >= 1");
    total += a;
  }
  if (total % 2 != 0) {
    throw Error(ErrorCode::kInvalidPartition, "values have an odd sum");
  }
  if (total != static_cast<__int128>(pp.half_sum) * 2) {
    throw Error(ErrorCode::kInvalidPartition, "half_sum is not half the total");
  }
}

}  // namespace

PartitionInstance PartitionInstance::FromValues(std::vector<int64_t> values) {
  __int128 total = 0;
  for (int64_t a : values) total += a;
  PartitionInstance pp{std::move(values), static_cast<int64_t>(total / 2)};
  ValidatePartition(pp);
  return pp;
}

GadgetOutput BuildGadget(const PartitionInstance& pp) {
  ValidatePartition(pp);
  const size_t n = pp.values.size();
  GadgetOutput out;
  InverseInstance& inv = out.instance;
  inv.norm = Norm::kL1;
  inv.base.budget = 3 * pp.half_sum;
  inv.bounds = ModificationBounds::Zeros(n + 1);
  inv.weights = {std::vector<Rational>(n + 1, Rational(1)),
                 std::vector<Rational>(n + 1, Rational(3))};
  inv.x_star.values.assign(n + 1, 1);
  inv.x_star.values[n] = 0;
  for (size_t i = 0; i < n; ++i) {
    const int64_t a = pp.values[i];
    inv.base.items.push_back({4 * a, 2 * a});
    inv.bounds.u_bar[i] = 4 * a;
    inv.bounds.mu_bar[i] = a;
  }
  inv.base.items.push_back({4, 1});
  out.decision_budget = Rational(7 * pp.half_sum);
  return out;
}

Rational GadgetOptimum(const PartitionInstance& pp, const OracleConfig& cfg) {
  const GadgetOutput gadget = BuildGadget(pp);
  const InverseSolution sol = DecomposedInverse(gadget.instance, cfg);
  if (!sol.optimal()) {
    // Cannot happen for a valid partition instance: mu = a on a prefix and
    // a partial mu on one item always meets the budget exactly.
    throw Error(ErrorCode::kInvariantViolation, "gadget has no feasible point");
  }
  return *sol.objective;
}

bool DecidePartitionViaGadget(const PartitionInstance& pp,
                              const OracleConfig& cfg) {
  return GadgetOptimum(pp, cfg) <= BuildGadget(pp).decision_budget;
}

bool HasEqualSplit(const PartitionInstance& pp) {
  ValidatePartition(pp);
  const size_t n = pp.values.size();
  if (n > 30) throw Error(ErrorCode::kTooLarge, "subset enumeration n > 30");
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    __int128 sum = 0;
    for (size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += pp.values[i];
    }
    if (sum == pp.half_sum) return true;
  }
  return false;
}

}  // namespace ifkp
