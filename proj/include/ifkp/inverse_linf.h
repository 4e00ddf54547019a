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

// Inverse fractional knapsack under the uniform l-infinity norm.
//
// For a budget K every modification is capped at K. The best use of K is
// fixed per item: I1 profits go up by min(K, u_bar), I0 profits go down by
// min(K, v_bar) and I0 costs go up by min(K, lambda_bar). What is left is
// the choice of a net cost change per I1 item that keeps its ratio above the
// largest I0 ratio and makes the selected costs sum to b. Feasibility in K
// is monotone, so the optimum is found by binary search on K.

#ifndef IFKP_INVERSE_LINF_H_
#define IFKP_INVERSE_LINF_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ifkp/types.h"

namespace ifkp {

struct CaseKind {
  enum Kind { kEqual, kDeficit, kSurplus };
  Kind kind = kEqual;
  // b - sum_{I1} c_i for kDeficit, sum_{I1} c_i - b for kSurplus, else 0.
  int64_t gap = 0;
};

// Water-filling assignment of a cost gap over the I1 items: items whose cap
// is below `level` take their cap (full_set), n_at_level of the others take
// `level` and the rest take level - 1.
struct RepairPlan {
  int64_t level = 0;
  std::vector<size_t> full_set;
  std::vector<size_t> level_set;
  int64_t n_at_level = 0;
};

enum class LinfMode {
  // I1 costs may move in either direction as long as they net out to b.
  kExact,
  // I1 costs stay fixed when sum c x* == b, only grow in the deficit case and
  // only shrink in the surplus case.
  kCaseRestricted,
};

int64_t LinfObjective(const ModificationVector& mods);

// Throws kOutOfRange if the gap does not fit in 64 bits.
CaseKind ClassifyCase(const InverseInstance& inv);

// Largest I0 ratio reachable with budget K:
//   max_j (p_j - min(K, v_bar_j)) / (c_j + min(K, lambda_bar_j)).
// Empty when I0 is empty.
std::optional<Rational> ThresholdAt(const InverseInstance& inv, int64_t k);

bool FeasibleAt(const InverseInstance& inv, int64_t k,
                LinfMode mode = LinfMode::kExact);

// Smallest K resolving the ratio conflict between i in I1 and j in I0 with
// I1 costs fixed. Zero when the pair is not in conflict; empty when even the
// full bounds do not resolve it.
std::optional<int64_t> PairwiseMinBudget(const InverseInstance& inv, size_t i,
                                         size_t j);

// Max of PairwiseMinBudget over I1 x I0; empty if any pair is unresolvable.
std::optional<int64_t> MaxPairwiseMinBudget(const InverseInstance& inv);

// Smallest level with sum_{I1} min(cap_i, level) >= gap, where the caps are
// lambda_bar for a deficit and min(mu_bar, c - 1) for a surplus. Throws
// kInfeasibleRepair when even the caps fall short.
RepairPlan RepairLevel(const InverseInstance& inv, const CaseKind& kind);

// Throws kNotLInf.
InverseSolution SolveLinf(const InverseInstance& inv,
                          LinfMode mode = LinfMode::kExact);

}  // namespace ifkp

#endif  // IFKP_INVERSE_LINF_H_
