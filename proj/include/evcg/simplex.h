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

#ifndef EVCG_SIMPLEX_H_
#define EVCG_SIMPLEX_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evcg::lp {

struct Term {
  int col;
  double coef;
};

using SparseRow = std::vector<Term>;

// maximize objective . x  subject to  eq_rows x == eq_rhs,
//                                     le_rows x <= le_rhs,  x >= 0.
struct StandardLp {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<SparseRow> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<SparseRow> le_rows;
  std::vector<double> le_rhs;

  int num_rows() const {
    return static_cast<int>(eq_rows.size() + le_rows.size());
  }
  // Throws ValidationError on dimension mismatches or non-finite data.
  void Validate() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string ToString(SolveStatus status);

struct SolveLimits {
  std::int64_t max_iterations = 500000;
  // Rows above this refuse with SizeGuardError; the basis inverse is dense.
  int max_rows = 4000;
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;
  // Degenerate pivots tolerated before switching to Bland's rule.
  int stall_threshold = 50;
  int refactor_interval = 64;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kIterationLimit;
  std::vector<double> primal;  // structural variables only
  std::vector<double> duals;   // eq rows first, then le rows
  double objective = 0.0;
  std::int64_t iterations = 0;
  std::int64_t bland_iterations = 0;
  double max_primal_violation = 0.0;   // recomputed from the input rows
  double complementary_slackness = 0.0;
};

// Two-phase revised simplex with Dantzig pricing and a Bland fallback after
// `stall_threshold` non-improving pivots. Columns are sparse; the basis
// inverse is kept dense and refactored periodically. Deterministic.
SolveResult Solve(const StandardLp& lp, const SolveLimits& limits = {});

// Largest violation of any row or bound by `x`; independent of solver state.
double MaxViolation(const StandardLp& lp, std::span<const double> x);

}  // namespace evcg::lp

#endif  // EVCG_SIMPLEX_H_
