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

#include "ifkp/oracle.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ifkp/error.h"
#include "ifkp/inverse_linf.h"

namespace ifkp {

namespace {

constexpr int kFields = 4;  // u, v, lambda, mu

int64_t BoundOf(const ModificationBounds& b, size_t item, int field) {
  switch (field) {
    case 0: return b.u_bar[item];
    case 1: return b.v_bar[item];
    case 2: return b.lambda_bar[item];
    default: return b.mu_bar[item];
  }
}

int64_t& FieldOf(ModificationVector& m, size_t item, int field) {
  switch (field) {
    case 0: return m.u[item];
    case 1: return m.v[item];
    case 2: return m.lambda[item];
    default: return m.mu[item];
  }
}

// Weights over a common denominator, so objectives compare as integers.
struct ScaledWeights {
  BigInt scale = 1;
  std::vector<BigInt> profit;
  std::vector<BigInt> cost;

  explicit ScaledWeights(const CostWeights& weights) {
    for (const auto* list : {&weights.w, &weights.w_cost}) {
      for (const Rational& w : *list) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.den().get_mpz_t());
      }
    }
    for (const Rational& w : weights.w) {
      profit.push_back(w.num() * (scale / w.den()));
    }
    for (const Rational& w : weights.w_cost) {
      cost.push_back(w.num() * (scale / w.den()));
    }
  }

  BigInt Objective(const ModificationVector& m) const {
    BigInt total = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      total += profit[i] * BigInt(static_cast<long>(m.u[i] + m.v[i]));
      total += cost[i] * BigInt(static_cast<long>(m.lambda[i] + m.mu[i]));
    }
    return total;
  }
};

void CheckSpace(const InverseInstance& inv, const OracleConfig& cfg) {
  const uint64_t space = SearchSpaceSize(inv);
  if (space > cfg.max_space) {
    throw Error(ErrorCode::kOracleLimitExceeded,
                "search space " + std::to_string(space) + " exceeds " +
                    std::to_string(cfg.max_space));
  }
}

// ---------------------------------------------------------------------------
// Decomposition oracle.

struct Option {
  std::array<int64_t, kFields> mods{};
  int64_t profit = 0;
  int64_t cost = 0;
};

std::vector<Option> EnumerateOptions(const InverseInstance& inv, size_t i) {
  std::vector<Option> out;
  const Item& item = inv.base.items[i];
  const auto& b = inv.bounds;
  for (int64_t u = 0; u <= b.u_bar[i]; ++u) {
    for (int64_t v = 0; v <= b.v_bar[i]; ++v) {
      for (int64_t l = 0; l <= b.lambda_bar[i]; ++l) {
        for (int64_t m = 0; m <= b.mu_bar[i]; ++m) {
          const int64_t p = item.profit + u - v;
          const int64_t c = item.cost + l - m;
          if (p < 1 || c < 1) continue;
          out.push_back({{u, v, l, m}, p, c});
        }
      }
    }
  }
  return out;
}

// Objective arithmetic for the two norms, over a value type V that is
// either __int128 (fits) or BigInt.
template <typename V>
struct Combiner {
  bool sum;  // l1 adds, l-infinity takes the max
  V Apply(const V& a, const V& b) const {
    if (sum) return a + b;
    return a < b ? b : a;
  }
};

template <typename V>
V FromBig(const BigInt& x);

template <>
__int128 FromBig<__int128>(const BigInt& x) {
  return static_cast<__int128>(x.get_si());
}

template <>
BigInt FromBig<BigInt>(const BigInt& x) {
  return x;
}

template <typename V>
BigInt ToBig(const V& x);

template <>
BigInt ToBig<__int128>(const __int128& x) {
  // The narrow path is only taken when every total stays below 2^62.
  return BigInt(static_cast<long>(x));
}

template <>
BigInt ToBig<BigInt>(const BigInt& x) {
  return x;
}

template <typename V>
InverseSolution RunDecomposition(const InverseInstance& inv,
                                 const OracleConfig& cfg,
                                 const ScaledWeights& sw) {
  const size_t n = inv.size();
  const Combiner<V> combine{inv.norm == Norm::kL1};
  std::vector<std::vector<Option>> options(n);
  std::vector<std::vector<V>> values(n);
  uint64_t work = 0;
  for (size_t i = 0; i < n; ++i) {
    options[i] = EnumerateOptions(inv, i);
    work += options[i].size();
    for (const Option& o : options[i]) {
      if (inv.norm == Norm::kL1) {
        const BigInt v =
            sw.profit[i] * BigInt(static_cast<long>(o.mods[0] + o.mods[1])) +
            sw.cost[i] * BigInt(static_cast<long>(o.mods[2] + o.mods[3]));
        values[i].push_back(FromBig<V>(v));
      } else {
        values[i].push_back(
            V(*std::max_element(o.mods.begin(), o.mods.end())));
      }
    }
  }

  const std::vector<size_t> ones = inv.x_star.Ones();
  const std::vector<size_t> zeros = inv.x_star.Zeros();

  // Net cost shift over I1 ranges over [shift_lo, shift_hi]; it must land
  // exactly on b - sum_{I1} c.
  __int128 shift_lo = 0;
  __int128 shift_hi = 0;
  __int128 target = inv.base.budget;
  for (size_t i : ones) {
    shift_lo -= inv.bounds.mu_bar[i];
    shift_hi += inv.bounds.lambda_bar[i];
    target -= inv.base.items[i].cost;
  }
  if (target < shift_lo || target > shift_hi) {
    return InverseSolution::Infeasible();
  }
  const size_t width = static_cast<size_t>(shift_hi - shift_lo + 1);

  // Candidate values of the largest I0 ratio, ascending. With no I0 items a
  // single unconstrained pass is made.
  std::vector<std::pair<int64_t, int64_t>> thetas;
  for (size_t j : zeros) {
    for (const Option& o : options[j]) thetas.emplace_back(o.profit, o.cost);
  }
  std::sort(thetas.begin(), thetas.end(), [](const auto& a, const auto& b) {
    return CompareRatios(a.first, a.second, b.first, b.second) < 0;
  });
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](const auto& a, const auto& b) {
                             return CompareRatios(a.first, a.second, b.first,
                                                  b.second) == 0;
                           }),
               thetas.end());
  const size_t passes = zeros.empty() ? 1 : thetas.size();

  std::optional<V> best;
  ModificationVector best_mods;

  // dp[layer][s]: cheapest objective over the first `layer` I1 items with
  // net shift shift_lo + s. pick holds the option that got there.
  std::vector<std::vector<std::optional<V>>> dp(
      ones.size() + 1, std::vector<std::optional<V>>(width));
  std::vector<std::vector<int>> pick(ones.size() + 1,
                                     std::vector<int>(width, -1));

  for (size_t pass = 0; pass < passes; ++pass) {
    const bool bounded = !zeros.empty();
    const int64_t tp = bounded ? thetas[pass].first : 0;
    const int64_t tc = bounded ? thetas[pass].second : 1;

    // I0: items are independent once theta is fixed.
    std::optional<V> zero_total;
    std::vector<int> zero_pick(zeros.size(), -1);
    bool zero_ok = true;
    for (size_t z = 0; z < zeros.size() && zero_ok; ++z) {
      const size_t j = zeros[z];
      std::optional<V> item_best;
      for (size_t k = 0; k < options[j].size(); ++k) {
        const Option& o = options[j][k];
        if (CompareRatios(o.profit, o.cost, tp, tc) > 0) continue;
        if (!item_best || values[j][k] < *item_best) {
          item_best = values[j][k];
          zero_pick[z] = static_cast<int>(k);
        }
      }
      work += options[j].size();
      if (!item_best) {
        zero_ok = false;
      } else {
        zero_total =
            zero_total ? combine.Apply(*zero_total, *item_best) : *item_best;
      }
    }
    if (!zero_ok) continue;

    // I1: exact DP over the net shift.
    for (auto& row : dp) std::fill(row.begin(), row.end(), std::nullopt);
    dp[0][static_cast<size_t>(-shift_lo)] = V(0);
    for (size_t t = 0; t < ones.size(); ++t) {
      const size_t i = ones[t];
      const int64_t base_cost = inv.base.items[i].cost;
      work += static_cast<uint64_t>(options[i].size()) * width;
      if (work > cfg.max_work) {
        throw Error(ErrorCode::kOracleLimitExceeded,
                    "decomposition work exceeds " +
                        std::to_string(cfg.max_work));
      }
      for (size_t s = 0; s < width; ++s) {
        if (!dp[t][s]) continue;
        for (size_t k = 0; k < options[i].size(); ++k) {
          const Option& o = options[i][k];
          if (bounded && CompareRatios(o.profit, o.cost, tp, tc) < 0) continue;
          const int64_t shift = o.cost - base_cost;
          const __int128 next = static_cast<__int128>(s) + shift;
          if (next < 0 || next >= static_cast<__int128>(width)) continue;
          const size_t ns = static_cast<size_t>(next);
          V cand = combine.Apply(*dp[t][s], values[i][k]);
          if (!dp[t + 1][ns] || cand < *dp[t + 1][ns]) {
            dp[t + 1][ns] = std::move(cand);
            pick[t + 1][ns] = static_cast<int>(k);
          }
        }
      }
    }
    const size_t goal = static_cast<size_t>(target - shift_lo);
    const auto& one_total = dp[ones.size()][goal];
    if (!one_total) continue;
    V total = zero_total ? combine.Apply(*zero_total, *one_total) : *one_total;
    if (best && !(total < *best)) continue;
    best = total;

    best_mods = ModificationVector::Zeros(n);
    for (size_t z = 0; z < zeros.size(); ++z) {
      const Option& o = options[zeros[z]][zero_pick[z]];
      for (int f = 0; f < kFields; ++f) FieldOf(best_mods, zeros[z], f) = o.mods[f];
    }
    size_t s = goal;
    for (size_t t = ones.size(); t > 0; --t) {
      const size_t i = ones[t - 1];
      const Option& o = options[i][pick[t][s]];
      for (int f = 0; f < kFields; ++f) FieldOf(best_mods, i, f) = o.mods[f];
      s = static_cast<size_t>(static_cast<__int128>(s) -
                              (o.cost - inv.base.items[i].cost));
    }
  }

  if (!best) return InverseSolution::Infeasible();
  const Rational objective = inv.norm == Norm::kL1
                                 ? Rational(ToBig<V>(*best), sw.scale)
                                 : Rational(ToBig<V>(*best));
  return InverseSolution::Optimal(std::move(best_mods), objective);
}

// True when every l1 option value and every sum of n of them fits in int64
// comfortably, so the DP can run on __int128.
bool FitsNarrow(const InverseInstance& inv, const ScaledWeights& sw) {
  const BigInt limit = BigInt(1) << 62;
  BigInt worst = 0;
  for (size_t i = 0; i < inv.size(); ++i) {
    worst += sw.profit[i] *
             BigInt(static_cast<long>(inv.bounds.u_bar[i] + inv.bounds.v_bar[i]));
    worst += sw.cost[i] * BigInt(static_cast<long>(inv.bounds.lambda_bar[i] +
                                                    inv.bounds.mu_bar[i]));
  }
  return worst < limit;
}

}  // namespace

uint64_t SearchSpaceSize(const InverseInstance& inv) {
  unsigned __int128 space = 1;
  constexpr unsigned __int128 kCap = std::numeric_limits<uint64_t>::max();
  for (size_t i = 0; i < inv.size(); ++i) {
    for (int f = 0; f < kFields; ++f) {
      space *= static_cast<unsigned __int128>(BoundOf(inv.bounds, i, f)) + 1;
      if (space > kCap) return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(space);
}

InverseSolution BruteInverse(const InverseInstance& inv,
                             const OracleConfig& cfg) {
  CheckSpace(inv, cfg);
  const size_t n = inv.size();
  const size_t vars = n * kFields;
  const ScaledWeights sw(inv.weights);

  ModificationVector cur = ModificationVector::Zeros(n);
  std::vector<int64_t> profit(n);
  std::vector<int64_t> cost(n);
  __int128 selected = 0;
  for (size_t i = 0; i < n; ++i) {
    profit[i] = inv.base.items[i].profit;
    cost[i] = inv.base.items[i].cost;
    if (inv.x_star.values[i] == 1) selected += cost[i];
  }

  auto passes = [&]() {
    if (selected != inv.base.budget) return false;
    std::optional<size_t> lo_one;
    std::optional<size_t> hi_zero;
    for (size_t i = 0; i < n; ++i) {
      if (profit[i] < 1 || cost[i] < 1) return false;
      if (inv.x_star.values[i] == 1) {
        if (!lo_one ||
            CompareRatios(profit[i], cost[i], profit[*lo_one], cost[*lo_one]) < 0) {
          lo_one = i;
        }
      } else if (!hi_zero || CompareRatios(profit[i], cost[i], profit[*hi_zero],
                                           cost[*hi_zero]) > 0) {
        hi_zero = i;
      }
    }
    return !lo_one || !hi_zero ||
           CompareRatios(profit[*lo_one], cost[*lo_one], profit[*hi_zero],
                         cost[*hi_zero]) >= 0;
  };

  // Applies a change of `delta` to variable `var`.
  auto shift = [&](size_t var, int64_t delta) {
    const size_t i = var / kFields;
    const int f = static_cast<int>(var % kFields);
    FieldOf(cur, i, f) += delta;
    switch (f) {
      case 0: profit[i] += delta; break;
      case 1: profit[i] -= delta; break;
      case 2:
        cost[i] += delta;
        if (inv.x_star.values[i] == 1) selected += delta;
        break;
      default:
        cost[i] -= delta;
        if (inv.x_star.values[i] == 1) selected -= delta;
        break;
    }
  };

  // Odometer over the flattened variables; the last one turns fastest.
  auto advance = [&]() {
    for (size_t var = vars; var-- > 0;) {
      const size_t i = var / kFields;
      const int f = static_cast<int>(var % kFields);
      if (FieldOf(cur, i, f) < BoundOf(inv.bounds, i, f)) {
        shift(var, 1);
        return true;
      }
      shift(var, -FieldOf(cur, i, f));
    }
    return false;
  };

  std::optional<BigInt> best;
  ModificationVector best_mods;
  do {
    if (!passes()) continue;
    BigInt value = inv.norm == Norm::kL1
                       ? sw.Objective(cur)
                       : BigInt(static_cast<long>(LinfObjective(cur)));
    if (!best || value < *best) {
      best = std::move(value);
      best_mods = cur;
    }
  } while (advance());

  if (!best) return InverseSolution::Infeasible();
  const Rational objective = inv.norm == Norm::kL1 ? Rational(*best, sw.scale)
                                                   : Rational(*best);
  return InverseSolution::Optimal(std::move(best_mods), objective);
}

InverseSolution DecomposedInverse(const InverseInstance& inv,
                                  const OracleConfig& cfg) {
  const ScaledWeights sw(inv.weights);
  if (inv.norm == Norm::kLInf || FitsNarrow(inv, sw)) {
    return RunDecomposition<__int128>(inv, cfg, sw);
  }
  return RunDecomposition<BigInt>(inv, cfg, sw);
}

FkpResult BruteFkp(const FkpInstance& inst) {
  if (inst.size() > 8) {
    throw Error(ErrorCode::kTooLarge, "permutation oracle is limited to n <= 8");
  }
  std::vector<size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<FkpResult> best;
  do {
    FkpResult r = GreedyFillInOrder(inst, order);
    if (!best || r.objective > best->objective) best = std::move(r);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

}  // namespace ifkp
