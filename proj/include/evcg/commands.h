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

#ifndef EVCG_COMMANDS_H_
#define EVCG_COMMANDS_H_

#include <cstdint>
#include <string>

#include "evcg/instances.h"

namespace evcg {

enum ExitCode {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitSizeGuard = 3,
  kExitMismatch = 4,
};

struct RunConfig {
  std::string command;  // gen | solve | round | bench | tables | verify | probe
  std::string dataset_path;
  int bad_example_k = 0;  // > 0: use the built-in worst-case dataset instead
  double delta = 0.025;
  double boost = 0.55;
  int samples = 64;
  std::uint64_t seed = 0;
  std::string format = "text";  // text | json | csv
  std::int64_t max_subprofiles = 500000;
  double tol_feas = 1e-7;
  std::int64_t brute_cap = 10000000;
  bool per_buyer_grid = false;
  int threads = 1;
  bool timings = false;

  // gen
  std::string kind;  // bad-example | uniform | correlated
  UniformInstanceSpec uniform;
  CorrelatedInstanceSpec correlated;

  // Extra inputs and artifacts.
  std::string masses_path;     // round/bench: round this mass instead of solving
  std::string reserves_path;   // verify
  std::string expect_revenue;  // verify: exact decimal to compare against
  std::string snapshot_path;   // tables
  std::string masses_out;
  std::string reserves_out;
  std::string lp_out;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // the report, or the generated dataset for gen
  std::string error;   // message for stderr when exit_code != 0
};

// Runs one subcommand. Never throws: errors become exit codes
// (2 validation, 3 size guard, 4 snapshot or revenue mismatch, 1 otherwise).
// With a fixed seed the output is byte-identical across runs and thread
// counts unless `timings` is set.
CommandResult RunCommand(const RunConfig& config);

// Default location of the stored table snapshot.
std::string DefaultSnapshotPath();

}  // namespace evcg

#endif  // EVCG_COMMANDS_H_
