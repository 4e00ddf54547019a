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

#include "ifkp/bench.h"

#include <chrono>

#include "ifkp/generator.h"
#include "ifkp/instance_io.h"
#include "ifkp/inverse_linf.h"

namespace ifkp {

std::string_view ModeName(ScanMode mode) {
  return mode == ScanMode::kPaper ? "paper" : "refined";
}

std::vector<BenchRecord> RunBench(const std::vector<int64_t>& n_list,
                                  const std::vector<Norm>& norms,
                                  const std::vector<ScanMode>& modes,
                                  uint64_t seed, const std::string& out_path,
                                  const BenchOptions& opts) {
  std::vector<BenchRecord> records;
  for (int64_t n : n_list) {
    for (Norm norm : norms) {
      GenOptions gen;
      gen.n = static_cast<size_t>(n);
      gen.seed = seed;
      gen.max_value = opts.max_value;
      gen.max_bound = opts.max_bound;
      gen.planted = opts.planted;
      gen.kind = norm == Norm::kL1 ? GenKind::kFixedCost : GenKind::kUniform;
      InverseInstance inv = GenerateRandom(gen);
      inv.norm = norm;
      for (ScanMode mode : modes) {
        const auto start = std::chrono::steady_clock::now();
        const InverseSolution sol =
            norm == Norm::kL1
                ? SolveFifkp(inv, mode)
                : SolveLinf(inv, mode == ScanMode::kPaper
                                     ? LinfMode::kCaseRestricted
                                     : LinfMode::kExact);
        const auto stop = std::chrono::steady_clock::now();
        records.push_back(
            {n, norm, mode, seed,
             sol.optimal() ? sol.objective->ToString() : "infeasible",
             std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                 .count()});
      }
    }
  }
  if (!out_path.empty()) WriteFile(out_path, BenchCsv(records));
  return records;
}

std::string BenchCsv(const std::vector<BenchRecord>& records) {
  std::string out = std::string(kBenchCsvHeader) + "\n";
  for (const BenchRecord& r : records) {
    out += std::to_string(r.n) + "," + std::string(NormName(r.norm)) + "," +
           std::string(ModeName(r.mode)) + "," + std::to_string(r.seed) + "," +
           r.objective + "," + std::to_string(r.elapsed_ns) + "\n";
  }
  return out;
}

}  // namespace ifkp
