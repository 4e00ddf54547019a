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

#include <algorithm>

#include "ifkp/error.h"

namespace ifkp {

int64_t SeededRng::Draw(int64_t lo, int64_t hi) {
  const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<int64_t>(engine_());  // full 64-bit span
  // 2^64 mod range, computed without overflow.
  const uint64_t excess = (0 - range) % range;
  while (true) {
    const uint64_t x = engine_();
    if (excess == 0 || x < 0 - excess) {
      return lo + static_cast<int64_t>(x % range);
    }
  }
}

InverseInstance GenerateRandom(const GenOptions& opts) {
  if (opts.n < 1 || opts.max_value < 1 || opts.max_bound < 0) {
    throw Error(ErrorCode::kInvariantViolation,
                "generator needs n >= 1, max_value >= 1, max_bound >= 0");
  }
  SeededRng rng(opts.seed);
  const size_t n = opts.n;
  const bool uniform = opts.kind == GenKind::kUniform;
  InverseInstance inv;
  inv.norm = uniform ? Norm::kLInf : Norm::kL1;
  for (size_t i = 0; i < n; ++i) {
    const int64_t p = rng.Draw(1, opts.max_value);
    const int64_t c = rng.Draw(1, opts.max_value);
    inv.base.items.push_back({p, c});
  }
  inv.x_star.values.resize(n);
  bool any_one = false;
  for (size_t i = 0; i < n; ++i) {
    inv.x_star.values[i] = static_cast<int>(rng.Draw(0, 1));
    any_one = any_one || inv.x_star.values[i] == 1;
  }
  if (!any_one) {
    inv.x_star.values[rng.Draw(0, static_cast<int64_t>(n) - 1)] = 1;
  }
  inv.bounds = ModificationBounds::Zeros(n);
  for (size_t i = 0; i < n; ++i) {
    const Item& item = inv.base.items[i];
    inv.bounds.u_bar[i] = rng.Draw(0, opts.max_bound);
    inv.bounds.v_bar[i] = rng.Draw(0, std::min(opts.max_bound, item.profit - 1));
    if (uniform) {
      inv.bounds.lambda_bar[i] = rng.Draw(0, opts.max_bound);
      inv.bounds.mu_bar[i] =
          rng.Draw(0, std::min(opts.max_bound, item.cost - 1));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    const int64_t wn = rng.Draw(1, 6);
    const int64_t wd = rng.Draw(1, 2);
    inv.weights.w.emplace_back(wn, wd);
    const int64_t cn = rng.Draw(1, 6);
    const int64_t cd = rng.Draw(1, 2);
    inv.weights.w_cost.emplace_back(cn, cd);
  }
  if (opts.planted) {
    for (size_t i = 0; i < n; ++i) {
      const Item& item = inv.base.items[i];
      if (inv.x_star.values[i] == 1) {
        inv.bounds.u_bar[i] = std::max(
            inv.bounds.u_bar[i],
            item.cost + inv.bounds.lambda_bar[i] - item.profit);
      } else {
        inv.bounds.v_bar[i] =
            std::max(inv.bounds.v_bar[i], item.profit - item.cost);
      }
    }
  }
  int64_t selected = 0;
  for (size_t i = 0; i < n; ++i) {
    if (inv.x_star.values[i] == 1) selected += inv.base.items[i].cost;
  }
  inv.base.budget = selected;
  if (uniform) {
    const int64_t which = rng.Draw(0, 2);
    const int64_t gap = rng.Draw(1, std::max<int64_t>(2, 2 * opts.max_bound));
    if (which == 1) {
      inv.base.budget = selected + gap;
    } else if (which == 2 && selected - gap >= 1) {
      inv.base.budget = selected - gap;
    }
  }
  ValidateInverseInstance(inv);
  return inv;
}

PartitionInstance GeneratePartition(size_t n, int64_t max_a, uint64_t seed) {
  if (n < 1 || max_a < 1) {
    throw Error(ErrorCode::kInvalidPartition, "need n >= 1 and max_a >= 1");
  }
  SeededRng rng(seed);
  std::vector<int64_t> values(n);
  int64_t total = 0;
  for (size_t i = 0; i < n; ++i) {
    values[i] = rng.Draw(1, max_a);
    total += values[i];
  }
  if (total % 2 != 0) {
    if (max_a == 1) {
      throw Error(ErrorCode::kInvalidPartition, "odd n with max_a == 1");
    }
    values[0] += values[0] == max_a ? -1 : 1;
  }
  return PartitionInstance::FromValues(std::move(values));
}

}  // namespace ifkp
