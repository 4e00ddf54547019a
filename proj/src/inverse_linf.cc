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

#include "ifkp/inverse_linf.h"

#include <algorithm>
#include <limits>

#include "ifkp/error.h"

namespace ifkp {

namespace {

// Allowed net cost change (lambda - mu) of one I1 item at a given budget.
struct ShiftWindow {
  int64_t lo = 0;
  int64_t hi = 0;
};

__int128 SignedGap(const InverseInstance& inv) {
  __int128 selected = 0;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (inv.x_star.values[i] == 1) selected += inv.base.items[i].cost;
  }
  return static_cast<__int128>(inv.base.budget) - selected;
}

// Windows for every I1 item, in index order; empty if some item has no
// admissible shift at all.
std::optional<std::vector<ShiftWindow>> ShiftWindows(
    const InverseInstance& inv, int64_t k, LinfMode mode, __int128 gap) {
  const std::optional<Rational> threshold = ThresholdAt(inv, k);
  std::vector<ShiftWindow> windows;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (inv.x_star.values[i] != 1) continue;
    const Item& item = inv.base.items[i];
    ShiftWindow w{-std::min(k, inv.bounds.mu_bar[i]),
                  std::min(k, inv.bounds.lambda_bar[i])};
    if (threshold) {
      // Largest shift d with p' >= T (c + d), i.e. d <= floor(p' / T) - c.
      const BigInt boosted =
          BigInt(static_cast<long>(item.profit)) +
          BigInt(static_cast<long>(std::min(k, inv.bounds.u_bar[i])));
      BigInt limit;
      const BigInt scaled = boosted * threshold->den();
      const BigInt tn = threshold->num();
      mpz_fdiv_q(limit.get_mpz_t(), scaled.get_mpz_t(), tn.get_mpz_t());
      limit -= static_cast<long>(item.cost);
      if (limit < static_cast<long>(w.hi)) {
        w.hi = limit < static_cast<long>(w.lo) ? w.lo - 1 : limit.get_si();
      }
    }
    if (mode == LinfMode::kCaseRestricted) {
      if (gap >= 0) w.lo = std::max<int64_t>(w.lo, 0);
      if (gap <= 0) w.hi = std::min<int64_t>(w.hi, 0);
    }
    if (w.lo > w.hi) return std::nullopt;
    windows.push_back(w);
  }
  return windows;
}

bool WindowsCoverGap(const std::vector<ShiftWindow>& windows, __int128 gap) {
  __int128 lo = 0;
  __int128 hi = 0;
  for (const ShiftWindow& w : windows) {
    lo += w.lo;
    hi += w.hi;
  }
  return lo <= gap && gap <= hi;
}

int64_t MaxBound(const InverseInstance& inv) {
  int64_t k = 0;
  for (const auto* list : {&inv.bounds.u_bar, &inv.bounds.v_bar,
                           &inv.bounds.lambda_bar, &inv.bounds.mu_bar}) {
    for (int64_t x : *list) k = std::max(k, x);
  }
  return k;
}

ModificationVector Extract(const InverseInstance& inv, int64_t k,
                           LinfMode mode) {
  const __int128 gap = SignedGap(inv);
  const auto windows = ShiftWindows(inv, k, mode, gap);
  ModificationVector mods = ModificationVector::Zeros(inv.size());
  std::vector<size_t> ones;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (inv.x_star.values[i] == 1) {
      mods.u[i] = std::min(k, inv.bounds.u_bar[i]);
      ones.push_back(i);
    } else {
      mods.v[i] = std::min(k, inv.bounds.v_bar[i]);
      mods.lambda[i] = std::min(k, inv.bounds.lambda_bar[i]);
    }
  }
  // Start every shift at the admissible value closest to zero, then walk the
  // items in index order towards the exact gap.
  std::vector<int64_t> shift(ones.size());
  __int128 total = 0;
  for (size_t t = 0; t < ones.size(); ++t) {
    shift[t] = std::clamp<int64_t>(0, (*windows)[t].lo, (*windows)[t].hi);
    total += shift[t];
  }
  for (size_t t = 0; t < ones.size() && total != gap; ++t) {
    const ShiftWindow& w = (*windows)[t];
    if (total < gap) {
      const __int128 step = std::min<__int128>(gap - total, w.hi - shift[t]);
      shift[t] += static_cast<int64_t>(step);
      total += step;
    } else {
      const __int128 step = std::min<__int128>(total - gap, shift[t] - w.lo);
      shift[t] -= static_cast<int64_t>(step);
      total -= step;
    }
  }
  for (size_t t = 0; t < ones.size(); ++t) {
    if (shift[t] > 0) mods.lambda[ones[t]] = shift[t];
    if (shift[t] < 0) mods.mu[ones[t]] = -shift[t];
  }
  return mods;
}

}  // namespace

int64_t LinfObjective(const ModificationVector& mods) {
  int64_t best = 0;
  for (const auto* list : {&mods.u, &mods.v, &mods.lambda, &mods.mu}) {
    for (int64_t x : *list) best = std::max(best, x);
  }
  return best;
}

CaseKind ClassifyCase(const InverseInstance& inv) {
  const __int128 gap = SignedGap(inv);
  const __int128 magnitude = gap < 0 ? -gap : gap;
  if (magnitude > std::numeric_limits<int64_t>::max()) {
    throw Error(ErrorCode::kOutOfRange, "cost gap exceeds 64 bits");
  }
  if (gap == 0) return {CaseKind::kEqual, 0};
  if (gap > 0) return {CaseKind::kDeficit, static_cast<int64_t>(gap)};
  return {CaseKind::kSurplus, static_cast<int64_t>(magnitude)};
}

std::optional<Rational> ThresholdAt(const InverseInstance& inv, int64_t k) {
  std::optional<size_t> best;
  int64_t best_p = 0;
  int64_t best_c = 1;
  for (size_t j = 0; j < inv.size(); ++j) {
    if (inv.x_star.values[j] != 0) continue;
    const int64_t p = inv.base.items[j].profit - std::min(k, inv.bounds.v_bar[j]);
    const int64_t c =
        inv.base.items[j].cost + std::min(k, inv.bounds.lambda_bar[j]);
    if (!best || CompareRatios(p, c, best_p, best_c) > 0) {
      best = j;
      best_p = p;
      best_c = c;
    }
  }
  if (!best) return std::nullopt;
  return Rational(best_p, best_c);
}

bool FeasibleAt(const InverseInstance& inv, int64_t k, LinfMode mode) {
  const __int128 gap = SignedGap(inv);
  const auto windows = ShiftWindows(inv, k, mode, gap);
  return windows && WindowsCoverGap(*windows, gap);
}

std::optional<int64_t> PairwiseMinBudget(const InverseInstance& inv, size_t i,
                                         size_t j) {
  const Item& a = inv.base.items[i];
  const Item& b = inv.base.items[j];
  if (CompareRatios(a, b) >= 0) return 0;
  const auto& bd = inv.bounds;
  auto resolved = [&](int64_t k) {
    const __int128 lhs =
        static_cast<__int128>(a.profit + std::min(k, bd.u_bar[i])) *
        (b.cost + std::min(k, bd.lambda_bar[j]));
    const __int128 rhs =
        static_cast<__int128>(b.profit - std::min(k, bd.v_bar[j])) * a.cost;
    return lhs >= rhs;
  };
  int64_t hi = std::max({bd.u_bar[i], bd.v_bar[j], bd.lambda_bar[j]});
  if (!resolved(hi)) return std::nullopt;
  int64_t lo = 0;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (resolved(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::optional<int64_t> MaxPairwiseMinBudget(const InverseInstance& inv) {
  const auto ones = inv.x_star.Ones();
  const auto zeros = inv.x_star.Zeros();
  int64_t best = 0;
  for (size_t i : ones) {
    for (size_t j : zeros) {
      const auto k = PairwiseMinBudget(inv, i, j);
      if (!k) return std::nullopt;
      best = std::max(best, *k);
    }
  }
  return best;
}

RepairPlan RepairLevel(const InverseInstance& inv, const CaseKind& kind) {
  std::vector<size_t> ones = inv.x_star.Ones();
  std::vector<int64_t> caps;
  __int128 cap_sum = 0;
  int64_t max_cap = 0;
  for (size_t i : ones) {
    const int64_t cap =
        kind.kind == CaseKind::kSurplus
            ? std::min(inv.bounds.mu_bar[i], inv.base.items[i].cost - 1)
            : inv.bounds.lambda_bar[i];
    caps.push_back(cap);
    cap_sum += cap;
    max_cap = std::max(max_cap, cap);
  }
  if (cap_sum < kind.gap) {
    throw Error(ErrorCode::kInfeasibleRepair,
                "cost caps cannot absorb a gap of " + std::to_string(kind.gap));
  }
  auto filled = [&](int64_t level) {
    __int128 sum = 0;
    for (int64_t cap : caps) sum += std::min(cap, level);
    return sum;
  };
  int64_t lo = 0;
  int64_t hi = max_cap;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (filled(mid) >= kind.gap) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  RepairPlan plan;
  plan.level = lo;
  __int128 capped = 0;
  for (size_t t = 0; t < ones.size(); ++t) {
    if (caps[t] < plan.level) {
      plan.full_set.push_back(ones[t]);
      capped += caps[t];
    } else {
      plan.level_set.push_back(ones[t]);
    }
  }
  plan.n_at_level = static_cast<int64_t>(
      kind.gap - capped -
      static_cast<__int128>(plan.level_set.size()) * (plan.level - 1));
  return plan;
}

InverseSolution SolveLinf(const InverseInstance& inv, LinfMode mode) {
  if (inv.norm != Norm::kLInf) {
    throw Error(ErrorCode::kNotLInf, "solver needs the l-infinity norm");
  }
  const CaseKind kind = ClassifyCase(inv);
  int64_t lo = 0;
  if (kind.kind != CaseKind::kEqual) {
    // No shift exceeds K, so the water-filling level bounds K from below.
    try {
      lo = RepairLevel(inv, kind).level;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleRepair) {
        return InverseSolution::Infeasible();
      }
      throw;
    }
  }
  int64_t hi = std::max(lo, MaxBound(inv));
  if (!FeasibleAt(inv, hi, mode)) return InverseSolution::Infeasible();
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (FeasibleAt(inv, mid, mode)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return InverseSolution::Optimal(Extract(inv, lo, mode), Rational(lo));
}

}  // namespace ifkp
