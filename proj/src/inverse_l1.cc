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

#include "ifkp/inverse_l1.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ifkp/error.h"

namespace ifkp {

namespace {

void RequireFixedCostModel(const InverseInstance& inv) {
  if (SelectedCost(inv.base, inv.x_star) != static_cast<long>(inv.base.budget)) {
    throw Error(ErrorCode::kBudgetMismatch,
                "fixed-cost model needs sum c_i x*_i == b");
  }
}

bool InRange(const PresolveResult& pre, const Rational& t) {
  if (pre.lower && t < *pre.lower) return false;
  if (pre.upper && t > *pre.upper) return false;
  return true;
}

BigInt ToBig(int64_t x) { return BigInt(static_cast<long>(x)); }

// Evaluates the threshold cost with all weights scaled to integers by their
// common denominator, so a scan compares integers only.
class ThresholdCost {
 public:
  ThresholdCost(const PresolveResult& pre, const CostWeights& weights)
      : pre_(pre), scale_(1) {
    for (const Rational& w : weights.w) {
      mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), w.den().get_mpz_t());
    }
    scaled_.reserve(weights.w.size());
    for (const Rational& w : weights.w) {
      scaled_.push_back(w.num() * (scale_ / w.den()));
    }
  }

  const BigInt& scale() const { return scale_; }

  // Scaled cost at t. When z is non-null it receives the per-item change
  // on top of the presolve.
  BigInt Evaluate(const Rational& t, std::vector<int64_t>* z) const {
    const BigInt tn = t.num();
    const BigInt td = t.den();
    const bool fast = tn.fits_slong_p() && td.fits_slong_p();
    const __int128 tn128 = fast ? tn.get_si() : 0;
    const __int128 td128 = fast ? td.get_si() : 0;
    BigInt total = 0;
    if (z) z->assign(pre_.costs.size(), 0);
    for (size_t i = 0; i < pre_.costs.size(); ++i) {
      const bool one = pre_.x_star[i] == 1;
      int64_t k = 0;
      if (fast) {
        const __int128 ct = static_cast<__int128>(pre_.costs[i]) * tn128;
        const __int128 pt =
            static_cast<__int128>(pre_.adjusted_profits[i]) * td128;
        const __int128 gap = one ? ct - pt : pt - ct;
        if (gap <= 0) continue;
        const __int128 steps = (gap + td128 - 1) / td128;
        if (steps > pre_.ResidualCap(i)) CapExceeded(i);
        k = static_cast<int64_t>(steps);
      } else {
        const BigInt ct = ToBig(pre_.costs[i]) * tn;
        const BigInt pt = ToBig(pre_.adjusted_profits[i]) * td;
        BigInt gap = one ? BigInt(ct - pt) : BigInt(pt - ct);
        if (gap <= 0) continue;
        gap += td - 1;
        BigInt steps;
        mpz_fdiv_q(steps.get_mpz_t(), gap.get_mpz_t(), td.get_mpz_t());
        if (steps > ToBig(pre_.ResidualCap(i))) CapExceeded(i);
        k = steps.get_si();
      }
      total += scaled_[i] * ToBig(k);
      if (z) (*z)[i] = k;
    }
    return total;
  }

 private:
  [[noreturn]] static void CapExceeded(size_t i) {
    throw std::logic_error("threshold change exceeds cap on item " +
                           std::to_string(i));
  }

  const PresolveResult& pre_;
  BigInt scale_;
  std::vector<BigInt> scaled_;
};

}  // namespace

FeasibilityBounds ComputeFeasibilityBounds(const InverseInstance& inv) {
  RequireFixedCostModel(inv);
  FeasibilityBounds out;
  for (size_t i = 0; i < inv.size(); ++i) {
    const Item& item = inv.base.items[i];
    if (inv.x_star.values[i] == 1) {
      const Rational r(item.profit + inv.bounds.u_bar[i], item.cost);
      if (!out.upper || r < *out.upper) out.upper = r;
    } else {
      const Rational r(item.profit - inv.bounds.v_bar[i], item.cost);
      if (!out.lower || r > *out.lower) out.lower = r;
    }
  }
  out.feasible = !out.lower || !out.upper || *out.lower <= *out.upper;
  return out;
}

PresolveResult Presolve(const InverseInstance& inv) {
  const FeasibilityBounds fb = ComputeFeasibilityBounds(inv);
  if (!fb.feasible) {
    throw Error(ErrorCode::kInvariantViolation,
                "presolve needs lower <= upper");
  }
  const size_t n = inv.size();
  PresolveResult pre;
  pre.lower = fb.lower;
  pre.upper = fb.upper;
  pre.z0.assign(n, 0);
  pre.z_bar.resize(n);
  pre.adjusted_profits.resize(n);
  pre.costs.resize(n);
  pre.x_star = inv.x_star.values;
  for (size_t i = 0; i < n; ++i) {
    const Item& item = inv.base.items[i];
    const bool one = inv.x_star.values[i] == 1;
    pre.costs[i] = item.cost;
    pre.z_bar[i] = one ? inv.bounds.u_bar[i] : inv.bounds.v_bar[i];
    const Rational ratio = RatioOf(item);
    if (one && pre.lower && ratio < *pre.lower) {
      pre.z0[i] = ToInt64(CeilRational(Rational(item.cost) * *pre.lower -
                                       Rational(item.profit)));
    } else if (!one && pre.upper && ratio > *pre.upper) {
      pre.z0[i] = ToInt64(CeilRational(Rational(item.profit) -
                                       Rational(item.cost) * *pre.upper));
    }
    if (pre.z0[i] > 0) {
      pre.forced_set.push_back(i);
      pre.base_cost += inv.weights.w[i] * Rational(pre.z0[i]);
    }
    pre.adjusted_profits[i] = one ? item.profit + pre.z0[i]
                                  : item.profit - pre.z0[i];
    const Rational adjusted(pre.adjusted_profits[i], item.cost);
    if (one) {
      if (!pre.alpha || adjusted < *pre.alpha) pre.alpha = adjusted;
    } else {
      if (!pre.beta || adjusted > *pre.beta) pre.beta = adjusted;
    }
  }
  return pre;
}

Rational CostAt(const PresolveResult& pre, const CostWeights& weights,
                const Rational& t) {
  if (!InRange(pre, t)) {
    throw Error(ErrorCode::kOutOfRange,
                "threshold " + t.ToString() + " outside [lower, upper]");
  }
  const ThresholdCost cost(pre, weights);
  return Rational(cost.Evaluate(t, nullptr), cost.scale());
}

std::vector<Rational> CandidateSet(const PresolveResult& pre, ScanMode mode) {
  std::vector<Rational> out;
  if (!pre.alpha || !pre.beta) return out;
  const Rational lo = std::max(*pre.lower, *pre.alpha);
  const Rational hi = std::min(*pre.upper, *pre.beta);
  if (lo > hi) return out;
  out.push_back(lo);
  out.push_back(hi);
  for (size_t i = 0; i < pre.costs.size(); ++i) {
    const Rational ratio(pre.adjusted_profits[i], pre.costs[i]);
    if (ratio < *pre.alpha || ratio > *pre.beta) continue;
    if (ratio >= lo && ratio <= hi) out.push_back(ratio);
    if (mode == ScanMode::kRefined) {
      // Every m / c_i in [lo, hi]: where ceil(c_i t - p_i) or
      // ceil(p_i - c_i t) steps.
      const Rational c(pre.costs[i]);
      const BigInt first = CeilRational(c * lo);
      const BigInt last = FloorRational(c * hi);
      for (BigInt m = first; m <= last; ++m) {
        out.emplace_back(m, ToBig(pre.costs[i]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FifkpResult SolveFifkpDetailed(const InverseInstance& inv, ScanMode mode) {
  if (inv.norm != Norm::kL1) {
    throw Error(ErrorCode::kNotL1, "fixed-cost solver needs the l1 norm");
  }
  FifkpResult result;
  if (!ComputeFeasibilityBounds(inv).feasible) return result;

  const PresolveResult pre = Presolve(inv);
  const std::vector<Rational> candidates = CandidateSet(pre, mode);
  result.candidate_count = candidates.size();

  std::vector<int64_t> z(inv.size(), 0);
  Rational scan_cost(0);
  if (!candidates.empty()) {
    const ThresholdCost cost(pre, inv.weights);
    size_t best = 0;
    BigInt best_value = cost.Evaluate(candidates[0], nullptr);
    for (size_t k = 1; k < candidates.size(); ++k) {
      BigInt value = cost.Evaluate(candidates[k], nullptr);
      if (value < best_value) {
        best_value = std::move(value);
        best = k;
      }
    }
    cost.Evaluate(candidates[best], &z);
    scan_cost = Rational(best_value, cost.scale());
    result.threshold = candidates[best];
  }

  ModificationVector mods = ModificationVector::Zeros(inv.size());
  for (size_t i = 0; i < inv.size(); ++i) {
    const int64_t total = pre.z0[i] + z[i];
    if (inv.x_star.values[i] == 1) {
      mods.u[i] = total;
    } else {
      mods.v[i] = total;
    }
  }
  result.solution =
      InverseSolution::Optimal(std::move(mods), pre.base_cost + scan_cost);
  return result;
}

InverseSolution SolveFifkp(const InverseInstance& inv, ScanMode mode) {
  return SolveFifkpDetailed(inv, mode).solution;
}

Rational L1Objective(const ModificationVector& mods,
                     const CostWeights& weights) {
  Rational total(0);
  for (size_t i = 0; i < mods.size(); ++i) {
    total += weights.w[i] * Rational(mods.u[i] + mods.v[i]);
    total += weights.w_cost[i] * Rational(mods.lambda[i] + mods.mu[i]);
  }
  return total;
}

}  // namespace ifkp
