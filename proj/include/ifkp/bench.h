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

#ifndef IFKP_BENCH_H_
#define IFKP_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ifkp/inverse_l1.h"
#include "ifkp/types.h"

namespace ifkp {

struct BenchRecord {
  int64_t n = 0;
  Norm norm = Norm::kL1;
  ScanMode mode = ScanMode::kPaper;
  uint64_t seed = 0;
  std::string objective;  // "num/den", or "infeasible"
  int64_t elapsed_ns = 0;
};

struct BenchOptions {
  int64_t max_value = 100;
  int64_t max_bound = 10;
  // Unplanted random instances of this size are almost always infeasible.
  bool planted = true;
};

inline constexpr char kBenchCsvHeader[] = "n,norm,mode,seed,objective,elapsed_ns";

// One timed solve per (n, norm, mode), in that nesting order. l1 rows run
// the fixed-cost solver on a kFixedCost instance. linf rows run SolveLinf
// on a kUniform instance; mode paper selects the case-restricted model and
// refined the exact one. The instance for a given n is the same across
// modes. When out_path is non-empty the CSV is written there (kIoError).
std::vector<BenchRecord> RunBench(const std::vector<int64_t>& n_list,
                                  const std::vector<Norm>& norms,
                                  const std::vector<ScanMode>& modes,
                                  uint64_t seed, const std::string& out_path,
                                  const BenchOptions& opts = {});

std::string BenchCsv(const std::vector<BenchRecord>& records);

std::string_view ModeName(ScanMode mode);

}  // namespace ifkp

#endif  // IFKP_BENCH_H_
