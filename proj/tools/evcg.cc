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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "evcg/commands.h"
#include "evcg/io.h"

namespace {

void AddCommon(CLI::App* cmd, evcg::RunConfig& config) {
  cmd->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--timings", config.timings, "Append wall-clock timings to the report");
}

void AddDataset(CLI::App* cmd, evcg::RunConfig& config) {
  cmd->add_option("--dataset", config.dataset_path, "Dataset JSON file");
  cmd->add_option("--bad-example", config.bad_example_k,
                  "Use the built-in worst-case dataset with this many items");
  cmd->add_option("--delta", config.delta, "High-reserve weight of the worst-case dataset");
}

void AddModel(CLI::App* cmd, evcg::RunConfig& config) {
  cmd->add_option("--max-subprofiles", config.max_subprofiles, "Sub-profile budget");
  cmd->add_option("--tol-feas", config.tol_feas, "Simplex feasibility tolerance");
  cmd->add_flag("--per-buyer-grid", config.per_buyer_grid,
                "Restrict each buyer's reserves to its own bids plus 0");
  cmd->add_option("--threads", config.threads, "Worker threads");
}

void AddRounding(CLI::App* cmd, evcg::RunConfig& config) {
  cmd->add_option("--boost", config.boost, "Share of mass routed to the discounted side");
  cmd->add_option("--samples", config.samples, "Draws per candidate family");
  cmd->add_option("--seed", config.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reserve prices for eager VCG auctions"};
  app.require_subcommand(1);
  evcg::RunConfig config;
  std::string out_path;
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a dataset");
  gen->add_option("--kind", config.kind, "Instance family")
      ->required()
      ->check(CLI::IsMember({"bad-example", "uniform", "correlated"}));
  gen->add_option("--k", config.bad_example_k, "Items of the worst-case dataset");
  gen->add_option("--delta", config.delta, "High-reserve weight of the worst-case dataset");
  gen->add_option("--seed", config.seed, "Random seed");
  std::int64_t buyers = 3, auctions = 3, items = 1, max_bid = 9, max_weight = 1;
  std::int64_t max_multiplier = 5, noise = 0;
  gen->add_option("--buyers", buyers);
  gen->add_option("--auctions", auctions);
  gen->add_option("--items", items);
  gen->add_option("--max-bid", max_bid, "Uniform bid range, or the auction value range");
  gen->add_option("--max-weight", max_weight);
  gen->add_option("--max-multiplier", max_multiplier);
  gen->add_option("--noise", noise);
  gen->add_option("--masses-out", config.masses_out,
                  "Also write the worst-case fractional mass");
  gen->add_option("--out", out_path);

  auto* solve = app.add_subcommand("solve", "Solve the sub-profile LP");
  AddDataset(solve, config);
  AddModel(solve, config);
  AddCommon(solve, config);
  solve->add_option("--masses-out", config.masses_out, "Write the LP mass");
  solve->add_option("--lp-out", config.lp_out, "Write the LP in CPLEX LP format");
  solve->add_option("--out", out_path);

  auto* round = app.add_subcommand("round", "Round the LP mass to reserves");
  AddDataset(round, config);
  AddModel(round, config);
  AddRounding(round, config);
  AddCommon(round, config);
  round->add_option("--masses", config.masses_path, "Round this mass instead of solving");
  round->add_option("--reserves-out", config.reserves_out, "Write the chosen reserves");
  round->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "Compare reserve-setting methods");
  AddDataset(bench, config);
  AddModel(bench, config);
  AddRounding(bench, config);
  AddCommon(bench, config);
  bench->add_option("--masses", config.masses_path, "Round this mass instead of solving");
  bench->add_option("--brute-cap", config.brute_cap, "Brute-force evaluation budget");
  bench->add_option("--out", out_path);

  auto* tables = app.add_subcommand("tables", "Recompute the bound tables");
  tables->add_option("--snapshot", config.snapshot_path, "Printed values to compare against");
  AddCommon(tables, config);
  tables->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Evaluate a reserve vector exactly");
  AddDataset(verify, config);
  AddCommon(verify, config);
  verify->add_option("--reserves", config.reserves_path, "Reserve vector JSON")->required();
  verify->add_option("--expect-revenue", config.expect_revenue,
                     "Fail with exit 4 unless the revenue equals this decimal");
  verify->add_option("--out", out_path);

  auto* probe = app.add_subcommand("probe", "Check the per-threshold rounding inequalities");
  AddDataset(probe, config);
  AddModel(probe, config);
  AddRounding(probe, config);
  AddCommon(probe, config);
  probe->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : evcg::kExitValidation;
  }

  for (const char* name : {"gen", "solve", "round", "bench", "tables", "verify", "probe"}) {
    if (app.got_subcommand(name)) config.command = name;
  }
  if (config.command == "gen") {
    config.uniform = {static_cast<int>(buyers), static_cast<int>(auctions),
                      static_cast<int>(items), max_bid, max_weight};
    config.correlated = {static_cast<int>(buyers), static_cast<int>(auctions),
                         static_cast<int>(items), max_bid, max_multiplier, noise, max_weight};
  }

  const evcg::CommandResult result = evcg::RunCommand(config);
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output << std::flush;
    } else {
      try {
        evcg::WriteFile(out_path, result.output);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return evcg::kExitFailure;
      }
    }
  }
  if (!result.error.empty()) std::cerr << result.error << '\n';
  return result.exit_code;
}
