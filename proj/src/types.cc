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

#include "ifkp/types.h"

#include <limits>
#include <string>

#include "ifkp/error.h"

namespace ifkp {

namespace {

constexpr int64_t kInt64Max = std::numeric_limits<int64_t>::max();

[[noreturn]] void Violation(const std::string& what) {
  throw Error(ErrorCode::kInvariantViolation, what);
}

std::string ItemTag(size_t i) { return "item " + std::to_string(i) + ": "; }

}  // namespace

std::vector<size_t> BinarySolution::Ones() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 1) out.push_back(i);
  }
  return out;
}

std::vector<size_t> BinarySolution::Zeros() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) out.push_back(i);
  }
  return out;
}

size_t FractionalSolution::FractionalCount() const {
  size_t count = 0;
  for (const Rational& x : values) {
    if (x > Rational(0) && x < Rational(1)) ++count;
  }
  return count;
}

ModificationBounds ModificationBounds::Zeros(size_t n) {
  return {std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0),
          std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0)};
}

ModificationVector ModificationVector::Zeros(size_t n) {
  return {std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0),
          std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0)};
}

bool ModificationVector::IsZero() const {
  for (const auto* list : {&u, &v, &lambda, &mu}) {
    for (int64_t x : *list) {
      if (x != 0) return false;
    }
  }
  return true;
}

CostWeights CostWeights::Uniform(size_t n, const Rational& value) {
  return {std::vector<Rational>(n, value), std::vector<Rational>(n, value)};
}

std::string_view NormName(Norm norm) {
  return norm == Norm::kL1 ? "l1" : "linf";
}

void ValidateFkpInstance(const FkpInstance& inst) {
  if (inst.items.empty()) Violation("instance has no items");
  if (inst.budget < 1) Violation("budget must be >= 1");
  for (size_t i = 0; i < inst.items.size(); ++i) {
    if (inst.items[i].profit < 1) Violation(ItemTag(i) + "profit must be >= 1");
    if (inst.items[i].cost < 1) Violation(ItemTag(i) + "cost must be >= 1");
  }
}

void ValidateInverseInstance(const InverseInstance& inv) {
  ValidateFkpInstance(inv.base);
  const size_t n = inv.size();
  const auto& b = inv.bounds;
  if (inv.x_star.size() != n || b.u_bar.size() != n || b.v_bar.size() != n ||
      b.lambda_bar.size() != n || b.mu_bar.size() != n ||
      inv.weights.w.size() != n || inv.weights.w_cost.size() != n) {
    Violation("per-item lists must all have length " + std::to_string(n));
  }
  for (size_t i = 0; i < n; ++i) {
    const Item& item = inv.base.items[i];
    if (inv.x_star.values[i] != 0 && inv.x_star.values[i] != 1) {
      Violation(ItemTag(i) + "x_star entries must be 0 or 1");
    }
    if (b.u_bar[i] < 0 || b.v_bar[i] < 0 || b.lambda_bar[i] < 0 ||
        b.mu_bar[i] < 0) {
      Violation(ItemTag(i) + "modification bounds must be >= 0");
    }
    if (b.v_bar[i] > item.profit - 1) {
      Violation(ItemTag(i) + "v_bar must be <= profit - 1");
    }
    if (b.mu_bar[i] > item.cost - 1) {
      Violation(ItemTag(i) + "mu_bar must be <= cost - 1");
    }
    if (b.u_bar[i] > kInt64Max - item.profit) {
      Violation(ItemTag(i) + "profit + u_bar exceeds 63 bits");
    }
    if (b.lambda_bar[i] > kInt64Max - item.cost) {
      Violation(ItemTag(i) + "cost + lambda_bar exceeds 63 bits");
    }
    if (inv.weights.w[i].sign() < 0 || inv.weights.w_cost[i].sign() < 0) {
      Violation(ItemTag(i) + "weights must be >= 0");
    }
  }
}

Rational RatioOf(const Item& item) { return Rational(item.profit, item.cost); }

BigInt SelectedCost(const FkpInstance& inst, const BinarySolution& x_star) {
  if (x_star.size() != inst.size()) {
    throw Error(ErrorCode::kLengthMismatch, "x_star length differs from items");
  }
  BigInt sum = 0;
  for (size_t i = 0; i < inst.size(); ++i) {
    if (x_star.values[i] == 1) sum += BigInt(static_cast<long>(inst.items[i].cost));
  }
  return sum;
}

FkpInstance ApplyModifications(const InverseInstance& inv,
                               const ModificationVector& mods) {
  const size_t n = inv.size();
  if (mods.u.size() != n || mods.v.size() != n || mods.lambda.size() != n ||
      mods.mu.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "modification vector length differs from items");
  }
  const auto& b = inv.bounds;
  FkpInstance out = inv.base;
  for (size_t i = 0; i < n; ++i) {
    if (mods.u[i] < 0 || mods.u[i] > b.u_bar[i] || mods.v[i] < 0 ||
        mods.v[i] > b.v_bar[i] || mods.lambda[i] < 0 ||
        mods.lambda[i] > b.lambda_bar[i] || mods.mu[i] < 0 ||
        mods.mu[i] > b.mu_bar[i]) {
      throw Error(ErrorCode::kBoundViolation,
                  ItemTag(i) + "modification outside [0, bound]");
    }
    // Bounds were validated to keep p + u_bar and c + lambda_bar in range.
    const int64_t profit = inv.base.items[i].profit + mods.u[i] - mods.v[i];
    const int64_t cost = inv.base.items[i].cost + mods.lambda[i] - mods.mu[i];
    if (profit < 1 || cost < 1) {
      throw Error(ErrorCode::kNonPositiveResult,
                  ItemTag(i) + "modified profit and cost must stay >= 1");
    }
    out.items[i] = {profit, cost};
  }
  return out;
}

}  // namespace ifkp
