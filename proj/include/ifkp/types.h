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

// Domain types shared by the forward solver, the inverse solvers and the
// exhaustive oracles. All integer parameters are stored as int64_t; anything
// that can grow beyond an input (sums, products, ratios) is computed either
// in 128-bit cross-multiplication or in arbitrary precision.

#ifndef IFKP_TYPES_H_
#define IFKP_TYPES_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ifkp/rational.h"

namespace ifkp {

struct Item {
  int64_t profit = 1;
  int64_t cost = 1;

  friend bool operator==(const Item&, const Item&) = default;
};

struct FkpInstance {
  std::vector<Item> items;
  int64_t budget = 1;

  size_t size() const { return items.size(); }
  friend bool operator==(const FkpInstance&, const FkpInstance&) = default;
};

// A 0/1 vector over the items. I1 / I0 are the indices holding 1 / 0.
struct BinarySolution {
  std::vector<int> values;

  size_t size() const { return values.size(); }
  std::vector<size_t> Ones() const;
  std::vector<size_t> Zeros() const;
  friend bool operator==(const BinarySolution&,
                         const BinarySolution&) = default;
};

struct FractionalSolution {
  std::vector<Rational> values;

  // Number of entries strictly between 0 and 1.
  size_t FractionalCount() const;
};

// Per-item caps: max profit increase (u), max profit decrease (v), max cost
// increase (lambda), max cost decrease (mu).
struct ModificationBounds {
  std::vector<int64_t> u_bar;
  std::vector<int64_t> v_bar;
  std::vector<int64_t> lambda_bar;
  std::vector<int64_t> mu_bar;

  static ModificationBounds Zeros(size_t n);
  friend bool operator==(const ModificationBounds&,
                         const ModificationBounds&) = default;
};

struct ModificationVector {
  std::vector<int64_t> u;
  std::vector<int64_t> v;
  std::vector<int64_t> lambda;
  std::vector<int64_t> mu;

  static ModificationVector Zeros(size_t n);
  size_t size() const { return u.size(); }
  bool IsZero() const;
  friend bool operator==(const ModificationVector&,
                         const ModificationVector&) = default;
};

// w: price per unit of profit change; w_cost: price per unit of cost change.
struct CostWeights {
  std::vector<Rational> w;
  std::vector<Rational> w_cost;

  static CostWeights Uniform(size_t n, const Rational& value);
  friend bool operator==(const CostWeights&, const CostWeights&) = default;
};

enum class Norm { kL1, kLInf };

std::string_view NormName(Norm norm);

struct InverseInstance {
  FkpInstance base;
  BinarySolution x_star;
  ModificationBounds bounds;
  CostWeights weights;
  Norm norm = Norm::kL1;

  size_t size() const { return base.size(); }
  friend bool operator==(const InverseInstance&,
                         const InverseInstance&) = default;
};

enum class SolveStatus { kOptimal, kInfeasible };

struct InverseSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<ModificationVector> mods;
  std::optional<Rational> objective;

  static InverseSolution Infeasible() { return {}; }
  static InverseSolution Optimal(ModificationVector mods, Rational objective) {
    return {SolveStatus::kOptimal, std::move(mods), std::move(objective)};
  }
  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Throws Error(kInvariantViolation) naming the first violated rule.
void ValidateFkpInstance(const FkpInstance& inst);
void ValidateInverseInstance(const InverseInstance& inv);

Rational RatioOf(const Item& item);

// Sign of p1/c1 - p2/c2 for positive costs, exact via 128-bit products.
inline int CompareRatios(int64_t p1, int64_t c1, int64_t p2, int64_t c2) {
  const __int128 lhs = static_cast<__int128>(p1) * c2;
  const __int128 rhs = static_cast<__int128>(p2) * c1;
  return (lhs > rhs) - (lhs < rhs);
}

inline int CompareRatios(const Item& a, const Item& b) {
  return CompareRatios(a.profit, a.cost, b.profit, b.cost);
}

// Sum of c_i x*_i over the items selected by x_star.
BigInt SelectedCost(const FkpInstance& inst, const BinarySolution& x_star);

// Profits p + u - v and costs c + lambda - mu; budget unchanged.
// Throws kLengthMismatch, kBoundViolation or kNonPositiveResult.
FkpInstance ApplyModifications(const InverseInstance& inv,
                               const ModificationVector& mods);

}  // namespace ifkp

#endif  // IFKP_TYPES_H_
