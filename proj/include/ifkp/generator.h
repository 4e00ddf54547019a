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

// Seeded instance generators.
//
// Randomness comes from std::mt19937_64 (whose output sequence is fixed by
// the C++ standard) seeded with the 64-bit seed. A draw from [lo, hi] takes
// the next engine output x, rejects it while x >= 2^64 - (2^64 mod r) with
// r = hi - lo + 1, and returns lo + x mod r. Draw order is documented on
// each generator, so corpora are reproducible in any language.

#ifndef IFKP_GENERATOR_H_
#define IFKP_GENERATOR_H_

#include <cstdint>
#include <random>

#include "ifkp/reduction.h"
#include "ifkp/types.h"

namespace ifkp {

class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi]; lo <= hi.
  int64_t Draw(int64_t lo, int64_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class GenKind {
  // Cost bounds zero, b = sum_{I1} c: ready for the fixed-cost l1 solver.
  kFixedCost,
  // All four bounds drawn; b is equal to, above or below sum_{I1} c.
  kUniform,
};

struct GenOptions {
  size_t n = 5;
  uint64_t seed = 0;
  int64_t max_value = 10;
  int64_t max_bound = 3;
  GenKind kind = GenKind::kFixedCost;
  // Raise u_bar and v_bar so that ratio 1 separates I1 from I0 after
  // modification, with room for each I1 item to absorb its full lambda_bar.
  bool planted = false;
};

// Draw order: per item p then c in [1, max_value]; per item x* in [0, 1]
// (if no item got a 1, item Draw(0, n-1) is set to 1); per item u_bar in
// [0, max_bound], v_bar in [0, min(max_bound, p-1)] and, for kUniform,
// lambda_bar in [0, max_bound] and mu_bar in [0, min(max_bound, c-1)]; per
// item w = Draw(1, 6) / Draw(1, 2) and w_cost likewise. For kUniform a case
// Draw(0, 2) picks b = S, S + g or S - g with S = sum_{I1} c and
// g = Draw(1, max(2, 2 max_bound)), the last only when S - g >= 1 (else
// b = S). norm is kL1 for kFixedCost, kLInf for kUniform. Planting raises
// u_bar of I1 items to at least c + lambda_bar - p and v_bar of I0 items to
// at least p - c after all draws, so it consumes no randomness.
InverseInstance GenerateRandom(const GenOptions& opts);

// Draw order: n values in [1, max_a]. If the total is odd the first value
// is decremented when it equals max_a and incremented otherwise. Throws
// kInvalidPartition when max_a == 1 and n is odd.
PartitionInstance GeneratePartition(size_t n, int64_t max_a, uint64_t seed);

}  // namespace ifkp

#endif  // IFKP_GENERATOR_H_
