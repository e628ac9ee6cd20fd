// Copyright 2026 The Authors.
//
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

#include "evcg/commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "evcg/io.h"
#include "json.hpp"

namespace evcg {
namespace {

using Json = nlohmann::json;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("evcg_commands_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& content) const {
    WriteFile(Path(name), content);
    return Path(name);
  }

  static RunConfig Config(const std::string& command) {
    RunConfig config;
    config.command = command;
    config.format = "json";
    return config;
  }

  static Json Run(const RunConfig& config) {
    const CommandResult r = RunCommand(config);
    EXPECT_EQ(r.exit_code, kExitOk) << r.error;
    return Json::parse(r.output);
  }

  std::filesystem::path dir_;
};

TEST_F(CommandsTest, SolveSingleBuyer) {
  RunConfig config = Config("solve");
  config.dataset_path =
      Write("one.json", R"({"num_items": 1, "buyers": ["a"], "auctions": [{"weight": 1, "bids": ["10"]}]})");
  const Json report = Run(config);
  EXPECT_EQ(report["objective"], "10.000000");
  EXPECT_EQ(report["solver"]["status"], "optimal");
}

TEST_F(CommandsTest, SolveBadExampleWritesArtifacts) {
  RunConfig config = Config("solve");
  config.bad_example_k = 2;
  config.masses_out = Path("m.json");
  config.lp_out = Path("model.lp");
  const Json report = Run(config);
  // At least the known fractional point 2k^3 + k^2 + (1 - delta)k.
  EXPECT_GE(std::stod(report["objective"].get<std::string>()), 21.95 - 1e-6);
  EXPECT_TRUE(std::filesystem::exists(config.masses_out));
  EXPECT_NE(ReadFile(config.lp_out).find("Maximize"), std::string::npos);
}

TEST_F(CommandsTest, RoundAllZeroBids) {
  RunConfig config = Config("round");
  config.dataset_path = Write("zero.json", R"({"num_items": 1, "buyers": ["a", "b"],
    "auctions": [{"weight": 1, "bids": ["0", "0"]}]})");
  EXPECT_EQ(Run(config)["rounding"]["chosen_revenue"], "0");
}

TEST_F(CommandsTest, RoundThenVerify) {
  RunConfig round = Config("round");
  round.bad_example_k = 2;
  round.reserves_out = Path("r.json");
  const Json report = Run(round);
  const std::string revenue = report["rounding"]["chosen_revenue"];
  EXPECT_GE(std::stoll(revenue), 12);

  RunConfig gen;
  gen.command = "gen";
  gen.kind = "bad-example";
  gen.bad_example_k = 2;
  RunConfig verify = Config("verify");
  verify.dataset_path = Write("bad.json", RunCommand(gen).output);
  verify.reserves_path = round.reserves_out;
  verify.expect_revenue = revenue;
  EXPECT_EQ(Run(verify)["revenue"], revenue);

  verify.expect_revenue = "1";
  const CommandResult mismatch = RunCommand(verify);
  EXPECT_EQ(mismatch.exit_code, kExitMismatch);
  EXPECT_NE(mismatch.error.find("differs"), std::string::npos);
  EXPECT_FALSE(mismatch.output.empty());
}

TEST_F(CommandsTest, RoundFromMassFile) {
  RunConfig gen;
  gen.command = "gen";
  gen.kind = "bad-example";
  gen.bad_example_k = 3;
  gen.masses_out = Path("m.json");
  RunConfig round = Config("round");
  round.dataset_path = Write("bad.json", RunCommand(gen).output);
  round.masses_path = gen.masses_out;
  const Json report = Run(round);
  EXPECT_EQ(report["relaxation"], "masses file");
  EXPECT_FALSE(report.contains("lp_objective"));
}

TEST_F(CommandsTest, ReportsIgnoreThreadCount) {
  for (const char* command : {"round", "bench", "probe"}) {
    RunConfig config = Config(command);
    config.bad_example_k = 2;
    config.seed = 17;
    config.format = "text";
    const std::string one = RunCommand(config).output;
    config.threads = 4;
    EXPECT_EQ(RunCommand(config).output, one) << command;
    EXPECT_EQ(one.find("thread"), std::string::npos);
    EXPECT_EQ(one.find("timings"), std::string::npos);
  }
}

TEST_F(CommandsTest, TimingsAreOptIn) {
  RunConfig config = Config("round");
  config.bad_example_k = 2;
  config.timings = true;
  EXPECT_TRUE(Run(config).contains("timings_ms"));
}

TEST_F(CommandsTest, GenIsDeterministic) {
  RunConfig config;
  config.command = "gen";
  config.kind = "uniform";
  config.uniform = {5, 4, 2, 9, 3};
  config.seed = 4;
  const std::string first = RunCommand(config).output;
  EXPECT_EQ(RunCommand(config).output, first);
  config.seed = 5;
  EXPECT_NE(RunCommand(config).output, first);
}

TEST_F(CommandsTest, CorrelatedWithoutNoiseIsProportional) {
  RunConfig config;
  config.command = "gen";
  config.kind = "correlated";
  config.correlated = {4, 5, 1, 10, 5, 0, 1};
  const Json d = Json::parse(RunCommand(config).output);
  const auto& auctions = d["auctions"];
  for (std::size_t b = 0; b < 4; ++b) {
    for (std::size_t a = 1; a < auctions.size(); ++a) {
      const long long b0 = std::stoll(auctions[0]["bids"][b].get<std::string>());
      const long long ba = std::stoll(auctions[a]["bids"][b].get<std::string>());
      const long long c0 = std::stoll(auctions[0]["bids"][0].get<std::string>());
      const long long ca = std::stoll(auctions[a]["bids"][0].get<std::string>());
      EXPECT_EQ(b0 * ca, ba * c0);
    }
  }
}

TEST_F(CommandsTest, TablesAgainstSnapshot) {
  RunConfig config = Config("tables");
  EXPECT_EQ(Run(config)["matched"], "39/39");

  std::string csv = ReadFile(DefaultSnapshotPath());
  const auto pos = csv.find(".697");
  ASSERT_NE(pos, std::string::npos);
  csv.replace(pos, 4, ".600");
  config.snapshot_path = Write("bad.csv", csv);
  const CommandResult r = RunCommand(config);
  EXPECT_EQ(r.exit_code, kExitMismatch);
  EXPECT_NE(r.error.find("y=1.5 x=0.6"), std::string::npos) << r.error;

  config.snapshot_path = Write("broken.csv", "table,y,x,alpha,printed\n1,abc\n");
  EXPECT_EQ(RunCommand(config).exit_code, kExitValidation);
}

TEST_F(CommandsTest, ExitCodes) {
  RunConfig config = Config("solve");
  EXPECT_EQ(RunCommand(config).exit_code, kExitValidation);  // no dataset
  config.dataset_path = Path("missing.json");
  EXPECT_EQ(RunCommand(config).exit_code, kExitValidation);
  config.dataset_path.clear();
  config.bad_example_k = 4;
  config.max_subprofiles = 10;
  EXPECT_EQ(RunCommand(config).exit_code, kExitSizeGuard);
  config.max_subprofiles = 500000;
  config.format = "yaml";
  EXPECT_EQ(RunCommand(config).exit_code, kExitValidation);
  config.format = "json";
  config.command = "round";
  config.boost = 1.5;
  EXPECT_EQ(RunCommand(config).exit_code, kExitValidation);
}

TEST_F(CommandsTest, BenchFallsBackPastGuards) {
  RunConfig config = Config("bench");
  config.bad_example_k = 30;
  const Json report = Run(config);
  bool closed_form = false, skipped = false;
  for (const Json& row : report["methods"]) {
    if (row["method"] == "lp_bound") closed_form = row["note"] == "fractional point (closed form)";
    if (row["method"] == "brute_force") skipped = row["revenue"] == "-";
  }
  EXPECT_TRUE(closed_form);
  EXPECT_TRUE(skipped);

  config.bad_example_k = 0;
  config.dataset_path = Write("big.json", R"({"num_items": 1, "buyers": ["a", "b", "c"],
    "auctions": [{"weight": 1, "bids": ["3", "2", "1"]}]})");
  config.max_subprofiles = 2;
  EXPECT_EQ(RunCommand(config).exit_code, kExitSizeGuard);
}

TEST_F(CommandsTest, BenchRatiosOnFixtures) {
  const auto fixtures =
      std::filesystem::path(DefaultSnapshotPath()).parent_path().parent_path() / "tests" / "data";
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    if (entry.path().extension() != ".json") continue;
    RunConfig config = Config("bench");
    config.dataset_path = entry.path().string();
    const Json report = Run(config);
    for (const Json& row : report["methods"]) {
      const std::string ratio = row["ratio_vs_brute_force"];
      if (row["method"] == "greedy") EXPECT_GE(std::stod(ratio), 0.5) << entry.path();
      if (row["method"] == "best_of_three") EXPECT_GE(std::stod(ratio), 0.63) << entry.path();
    }
    ++seen;
  }
  EXPECT_GE(seen, 5);
}

TEST_F(CommandsTest, CsvHasSections) {
  RunConfig config = Config("bench");
  config.bad_example_k = 2;
  config.format = "csv";
  const std::string out = RunCommand(config).output;
  EXPECT_EQ(out.rfind("key,value\n", 0), 0u);
  EXPECT_NE(out.find("\n# methods\nmethod,revenue,ratio_vs_lp"), std::string::npos);
}

}  // namespace
}  // namespace evcg
