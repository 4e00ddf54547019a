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

#include "ifkp/cli.h"

#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ifkp/bench.h"
#include "ifkp/error.h"
#include "ifkp/fkp.h"
#include "ifkp/generator.h"
#include "ifkp/instance_io.h"
#include "ifkp/inverse_l1.h"
#include "ifkp/inverse_linf.h"
#include "ifkp/oracle.h"
#include "ifkp/reduction.h"
#include "json.hpp"

namespace ifkp {

namespace {

using nlohmann::json;

const std::map<std::string, Norm> kNorms{{"l1", Norm::kL1},
                                         {"linf", Norm::kLInf}};
const std::map<std::string, ScanMode> kModes{{"paper", ScanMode::kPaper},
                                             {"refined", ScanMode::kRefined}};

std::string VerdictName(OptimalityVerdict v) {
  switch (v) {
    case OptimalityVerdict::kOptimal: return "optimal";
    case OptimalityVerdict::kBudgetMismatch: return "budget_mismatch";
    case OptimalityVerdict::kRatioViolation: return "ratio_violation";
  }
  return "unknown";
}

json ReportJson(const OptimalityReport& report) {
  json out{{"verdict", VerdictName(report.verdict)},
           {"lhs_sum", report.lhs_sum.get_str()}};
  if (report.witness) {
    out["witness"] = {report.witness->first, report.witness->second};
  }
  return out;
}

json ModsJson(const ModificationVector& m) {
  return {{"u", m.u}, {"v", m.v}, {"lambda", m.lambda}, {"mu", m.mu}};
}

// Status, objective, modifications, the modified instance and its
// optimality certificate. Returns the exit code.
int EmitSolution(const InverseInstance& inv, const InverseSolution& sol,
                 json doc, std::ostream& out) {
  if (!sol.optimal()) {
    doc["status"] = "infeasible";
    out << doc.dump(2) << "\n";
    return kExitInfeasible;
  }
  const FkpInstance modified = ApplyModifications(inv, *sol.mods);
  doc["status"] = "optimal";
  doc["objective"] = sol.objective->ToString();
  doc["mods"] = ModsJson(*sol.mods);
  doc["modified_instance"] = json::parse(SerializeFkpInstance(modified));
  doc["certificate"] = ReportJson(CheckOptimality(modified, inv.x_star));
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int RunSolve(const std::string& file, std::ostream& out) {
  const InstanceDocument doc = ParseDocument(ReadFile(file));
  const FkpResult r = SolveGreedy(doc.base);
  json x = json::array();
  for (const Rational& v : r.solution.values) x.push_back(v.ToString());
  out << json{{"objective", r.objective.ToString()}, {"x", x}}.dump(2) << "\n";
  return kExitOk;
}

int RunCheck(const std::string& file, std::ostream& out) {
  const InverseInstance inv = ParseInstance(ReadFile(file));
  out << ReportJson(CheckOptimality(inv.base, inv.x_star)).dump(2) << "\n";
  return kExitOk;
}

int RunInverse(const std::string& file, Norm norm, ScanMode mode,
               std::ostream& out) {
  InverseInstance inv = ParseInstance(ReadFile(file));
  inv.norm = norm;
  json doc{{"norm", NormName(norm)}, {"mode", ModeName(mode)}};
  if (norm == Norm::kL1) {
    const FifkpResult r = SolveFifkpDetailed(inv, mode);
    if (r.threshold) doc["threshold"] = r.threshold->ToString();
    doc["candidates"] = r.candidate_count;
    return EmitSolution(inv, r.solution, std::move(doc), out);
  }
  const LinfMode model =
      mode == ScanMode::kPaper ? LinfMode::kCaseRestricted : LinfMode::kExact;
  return EmitSolution(inv, SolveLinf(inv, model), std::move(doc), out);
}

int RunOracle(const std::string& file, Norm norm, const std::string& method,
              const OracleConfig& cfg, std::ostream& out) {
  InverseInstance inv = ParseInstance(ReadFile(file));
  inv.norm = norm;
  const InverseSolution sol = method == "brute" ? BruteInverse(inv, cfg)
                                                : DecomposedInverse(inv, cfg);
  json doc{{"norm", NormName(norm)}, {"method", method}};
  if (method == "brute") doc["space"] = SearchSpaceSize(inv);
  return EmitSolution(inv, sol, std::move(doc), out);
}

std::vector<int64_t> ParseValueList(const std::string& text) {
  std::vector<int64_t> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad value '" + token + "'");
    }
  }
  return values;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact solvers for the fractional knapsack problem and its "
               "inverse variants"};
  app.require_subcommand(1);

  std::string file;
  std::string norm_name = "l1";
  std::string mode_name = "refined";

  auto* solve = app.add_subcommand("solve", "greedy forward solve");
  solve->add_option("file", file, "instance JSON")->required();

  auto* check = app.add_subcommand("check", "optimality criterion for x_star");
  check->add_option("file", file, "instance JSON")->required();

  auto* inverse = app.add_subcommand("inverse", "solve the inverse problem");
  inverse->add_option("--norm", norm_name, "l1 or linf")
      ->required()
      ->check(CLI::IsMember({"l1", "linf"}));
  inverse->add_option("--mode", mode_name,
                      "l1: candidate set; linf: paper = case-restricted model")
      ->check(CLI::IsMember({"paper", "refined"}));
  inverse->add_option("file", file, "instance JSON")->required();

  uint64_t max_space = OracleConfig{}.max_space;
  std::string method = "brute";
  auto* oracle = app.add_subcommand("oracle", "exhaustive inverse solve");
  oracle->add_option("--norm", norm_name, "l1 or linf")
      ->required()
      ->check(CLI::IsMember({"l1", "linf"}));
  oracle->add_option("--max-space", max_space, "cap on enumerated vectors")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--method", method, "brute or decomposed")
      ->check(CLI::IsMember({"brute", "decomposed"}));
  oracle->add_option("file", file, "instance JSON")->required();

  GenOptions gen_opts;
  std::string gen_kind = "fixed-cost";
  std::string gen_out;
  std::string values_text;
  int64_t max_a = 6;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "seeded random instance");
  gen_random->add_option("--n", gen_opts.n, "items")->check(CLI::PositiveNumber);
  gen_random->add_option("--seed", gen_opts.seed, "64-bit seed");
  gen_random->add_option("--max-value", gen_opts.max_value, "profit/cost cap")
      ->check(CLI::PositiveNumber);
  gen_random->add_option("--max-bound", gen_opts.max_bound,
                         "modification bound cap")
      ->check(CLI::NonNegativeNumber);
  gen_random->add_option("--kind", gen_kind, "fixed-cost or uniform")
      ->check(CLI::IsMember({"fixed-cost", "uniform"}));
  gen_random->add_flag("--planted", gen_opts.planted,
                       "widen bounds so the instance is feasible");
  gen_random->add_option("-o,--out", gen_out, "output JSON")->required();
  auto* gen_partition =
      gen->add_subcommand("partition", "Partition gadget instance");
  gen_partition->add_option("--values", values_text,
                            "comma-separated values (else random)");
  gen_partition->add_option("--n", gen_opts.n, "random: number of values")
      ->check(CLI::PositiveNumber);
  gen_partition->add_option("--max-a", max_a, "random: largest value")
      ->check(CLI::PositiveNumber);
  gen_partition->add_option("--seed", gen_opts.seed, "random: seed");
  gen_partition->add_option("-o,--out", gen_out, "output JSON")->required();

  std::vector<int64_t> bench_n;
  std::vector<std::string> bench_norms{"l1", "linf"};
  std::vector<std::string> bench_modes{"paper", "refined"};
  uint64_t bench_seed = 1;
  std::string bench_out;
  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "timing runs to CSV");
  bench->add_option("--n", bench_n, "instance sizes (none: header only)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--norm", bench_norms, "norms")
      ->check(CLI::IsMember({"l1", "linf"}));
  bench->add_option("--mode", bench_modes, "modes")
      ->check(CLI::IsMember({"paper", "refined"}));
  bench->add_option("--seed", bench_seed, "seed");
  bench->add_option("--max-value", bench_opts.max_value, "profit/cost cap")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-bound", bench_opts.max_bound, "bound cap")
      ->check(CLI::NonNegativeNumber);
  bench->add_flag("--unplanted{false}", bench_opts.planted,
                  "use plain random instances");
  bench->add_option("--out", bench_out, "output CSV")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (*solve) {
      code = RunSolve(file, buffer);
    } else if (*check) {
      code = RunCheck(file, buffer);
    } else if (*inverse) {
      code = RunInverse(file, kNorms.at(norm_name), kModes.at(mode_name),
                        buffer);
    } else if (*oracle) {
      OracleConfig cfg;
      cfg.max_space = max_space;
      code = RunOracle(file, kNorms.at(norm_name), method, cfg, buffer);
    } else if (*gen_random) {
      gen_opts.kind =
          gen_kind == "uniform" ? GenKind::kUniform : GenKind::kFixedCost;
      const InverseInstance inv = GenerateRandom(gen_opts);
      WriteFile(gen_out, SerializeInstance(inv));
      buffer << json{{"out", gen_out}, {"n", inv.size()},
                     {"b", inv.base.budget}}
                    .dump(2)
             << "\n";
    } else if (*gen_partition) {
      const PartitionInstance pp =
          values_text.empty()
              ? GeneratePartition(gen_opts.n, max_a, gen_opts.seed)
              : PartitionInstance::FromValues(ParseValueList(values_text));
      const GadgetOutput g = BuildGadget(pp);
      WriteFile(gen_out, SerializeInstance(g.instance));
      buffer << json{{"out", gen_out},
                     {"values", pp.values},
                     {"half_sum", pp.half_sum},
                     {"decision_budget", g.decision_budget.ToString()}}
                    .dump(2)
             << "\n";
    } else if (*bench) {
      std::vector<Norm> norms;
      for (const auto& name : bench_norms) norms.push_back(kNorms.at(name));
      std::vector<ScanMode> modes;
      for (const auto& name : bench_modes) modes.push_back(kModes.at(name));
      const auto records =
          RunBench(bench_n, norms, modes, bench_seed, bench_out, bench_opts);
      buffer << BenchCsv(records);
    }
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kOracleLimitExceeded ? kExitOracleLimit
                                                       : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace ifkp
