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

// Ground-truth solvers. None of them share code with the fast solvers beyond
// the optimality checker and the objective definitions.

#ifndef IFKP_ORACLE_H_
#define IFKP_ORACLE_H_

#include <cstdint>

#include "ifkp/fkp.h"
#include "ifkp/types.h"

namespace ifkp {

struct OracleConfig {
  // Cap on the number of modification vectors BruteInverse may visit.
  uint64_t max_space = 10'000'000;
  // Cap on the elementary steps DecomposedInverse may take.
  uint64_t max_work = 2'000'000'000;
};

// Product over all 4n variables of (bound + 1), saturated at UINT64_MAX.
uint64_t SearchSpaceSize(const InverseInstance& inv);

// Visits every in-bound integer modification vector, keeps those under
// which x* passes CheckOptimality and returns the cheapest under inv.norm.
// Vectors are visited in lexicographic order of the per-item flattening
// (u_1, v_1, lambda_1, mu_1, u_2, ...), and the first minimum wins.
// Throws kOracleLimitExceeded when SearchSpaceSize exceeds cfg.max_space.
InverseSolution BruteInverse(const InverseInstance& inv,
                             const OracleConfig& cfg = {});

// Same optimum as BruteInverse, without visiting the product space. Every
// in-bound option of every item is still enumerated; options are combined
// by fixing the largest I0 ratio theta, taking the cheapest admissible
// option per I0 item independently, and running an exact min-cost DP over
// the selected-cost sum for the I1 items whose ratio is >= theta. The
// returned vector is one optimal witness, not necessarily the
// lexicographically smallest. Throws kOracleLimitExceeded past cfg.max_work.
InverseSolution DecomposedInverse(const InverseInstance& inv,
                                  const OracleConfig& cfg = {});

// Best greedy fill over all n! item orders. Accepts b = 0. Throws kTooLarge
// for n > 8.
FkpResult BruteFkp(const FkpInstance& inst);

}  // namespace ifkp

#endif  // IFKP_ORACLE_H_
