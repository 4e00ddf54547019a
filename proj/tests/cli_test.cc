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

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "ifkp/bench.h"
#include "json.hpp"
#include "test_util.h"

namespace ifkp {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ifkp");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ifkp_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return dir_ / name; }
  std::string Write(const std::string& name, const std::string& text) const {
    WriteFile(Path(name), text);
    return Path(name);
  }

  std::filesystem::path dir_;
  const std::string five_items_ = std::string(IFKP_DATA_DIR) + "/five_items.json";
};

TEST_F(CliTest, InverseEchoesModifiedInstanceAndCertificate) {
  const CliRun r = Cli({"inverse", "--norm", "l1", five_items_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "optimal");
  EXPECT_EQ(doc["objective"], "5/2");
  EXPECT_EQ(doc["mode"], "refined");
  EXPECT_EQ(doc["threshold"], "1");
  EXPECT_EQ(doc["certificate"]["verdict"], "optimal");
  EXPECT_EQ(doc["modified_instance"]["items"][1]["p"], 10);
  EXPECT_EQ(doc["modified_instance"]["b"], 25);
}

TEST_F(CliTest, InverseLinfModes) {
  for (const char* mode : {"paper", "refined"}) {
    const CliRun r = Cli({"inverse", "--norm", "linf", "--mode", mode, five_items_});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["objective"], "2");
  }
}

TEST_F(CliTest, InfeasibleExitsTwo) {
  const std::string f = Write("inf.json", R"({"b": 1, "x_star": [1, 0],
      "items": [{"p": 1, "c": 1}, {"p": 5, "c": 1}]})");
  const CliRun r = Cli({"inverse", "--norm", "l1", f});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_EQ(json::parse(r.out)["status"], "infeasible");
  EXPECT_EQ(Cli({"oracle", "--norm", "linf", f}).code, kExitInfeasible);
}

TEST_F(CliTest, InvalidInputExitsThreeWithEmptyStdout) {
  const std::vector<std::vector<std::string>> cases{
      {"inverse", "--norm", "l1", Path("missing.json")},
      {"inverse", "--norm", "l2", five_items_},
      {"inverse", five_items_},
      {"check", Write("bad.json", "{ not json")},
      {"nonsense"},
      {},
  };
  for (const auto& args : cases) {
    const CliRun r = Cli(args);
    EXPECT_EQ(r.code, kExitInvalidInput) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST_F(CliTest, OracleLimitExitsFour) {
  const CliRun r = Cli({"oracle", "--norm", "l1", "--max-space", "10", five_items_});
  EXPECT_EQ(r.code, kExitOracleLimit);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, OracleMethods) {
  for (const char* method : {"brute", "decomposed"}) {
    const CliRun r =
        Cli({"oracle", "--norm", "l1", "--method", method, five_items_});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["objective"], "5/2");
  }
}

TEST_F(CliTest, SolveAndCheck) {
  CliRun r = Cli({"solve", five_items_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["objective"], "29");
  r = Cli({"check", five_items_});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "ratio_violation");
  EXPECT_EQ(doc["witness"], json::array({1, 4}));
}

TEST_F(CliTest, GenRandomWritesParseableInstance) {
  const CliRun r = Cli({"gen", "random", "--n", "7", "--seed", "3", "--kind",
                     "uniform", "-o", Path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const InverseInstance inv = ParseInstance(ReadFile(Path("r.json")));
  EXPECT_EQ(inv.size(), 7u);
  const int code = Cli({"oracle", "--norm", "linf", "--method", "decomposed",
                        Path("r.json")})
                       .code;
  EXPECT_TRUE(code == kExitOk || code == kExitInfeasible);
}

TEST_F(CliTest, GenPartitionReportsDecisionBudget) {
  const CliRun r =
      Cli({"gen", "partition", "--values", "1,3", "-o", Path("g.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["decision_budget"], "14");
  EXPECT_EQ(doc["half_sum"], 2);
  EXPECT_EQ(ParseInstance(ReadFile(Path("g.json"))).base.budget, 6);
  EXPECT_EQ(Cli({"gen", "partition", "--values", "1,x", "-o",
                 Path("h.json")})
                .code,
            kExitInvalidInput);
}

TEST_F(CliTest, BenchWritesOrderedCsv) {
  const CliRun r = Cli({"bench", "--n", "10", "20", "--mode", "paper", "--seed",
                     "4", "--out", Path("b.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(ReadFile(Path("b.csv")));
  std::string line;
  std::vector<std::string> prefixes;
  std::getline(csv, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  while (std::getline(csv, line)) prefixes.push_back(line.substr(0, 13));
  EXPECT_EQ(prefixes, (std::vector<std::string>{
                          "10,l1,paper,4", "10,linf,paper", "20,l1,paper,4",
                          "20,linf,paper"}));

  const CliRun empty = Cli({"bench", "--out", Path("e.csv")});
  ASSERT_EQ(empty.code, kExitOk) << empty.err;
  EXPECT_EQ(ReadFile(Path("e.csv")), std::string(kBenchCsvHeader) + "\n");
}

TEST_F(CliTest, HelpExitsZero) {
  const CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("inverse"), std::string::npos);
}

}  // namespace
}  // namespace ifkp
