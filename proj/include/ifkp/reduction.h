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

// Partition-to-inverse-knapsack gadget. Each value a_i becomes an item with
// profit 4 a_i and cost 2 a_i that may gain up to 4 a_i profit (price 1 per
// unit) or lose up to a_i cost (price 3 per unit); a fixed sentinel item
// (4, 1) stays out of the knapsack. The budget is 3B and the decision
// threshold 7B, where B is half the total.

#ifndef IFKP_REDUCTION_H_
#define IFKP_REDUCTION_H_

#include <cstdint>
#include <vector>

#include "ifkp/oracle.h"
#include "ifkp/types.h"

namespace ifkp {

struct PartitionInstance {
  std::vector<int64_t> values;
  int64_t half_sum = 0;

  // Throws kInvalidPartition for an odd total or a value below 1.
  static PartitionInstance FromValues(std::vector<int64_t> values);
};

struct GadgetOutput {
  InverseInstance instance;
  Rational decision_budget;
};

// Throws kInvalidPartition.
GadgetOutput BuildGadget(const PartitionInstance& pp);

// Exact minimum l1 objective of the gadget, from DecomposedInverse.
// Throws kOracleLimitExceeded.
Rational GadgetOptimum(const PartitionInstance& pp,
                       const OracleConfig& cfg = {});

// GadgetOptimum(pp) <= decision budget.
bool DecidePartitionViaGadget(const PartitionInstance& pp,
                              const OracleConfig& cfg = {});

// Direct subset-sum enumeration: is there a subset summing to half_sum?
// Throws kTooLarge above 30 values.
bool HasEqualSplit(const PartitionInstance& pp);

}  // namespace ifkp

#endif  // IFKP_REDUCTION_H_
