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

#ifndef EVCG_LP_MODEL_H_
#define EVCG_LP_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "evcg/dataset.h"
#include "evcg/money.h"
#include "evcg/simplex.h"

namespace evcg {

// One winner's view of an auction outcome: who won, who set the price, and the
// two reserves involved.
struct SubProfile {
  int winner = -1;
  int supporter = -1;
  Money winner_reserve;
  Money supporter_reserve;
  Money revenue;  // max(supporter's bid, winner_reserve)

  friend bool operator==(const SubProfile&, const SubProfile&) = default;
};

// Every (winner, supporter, r1, r2) with winner bid >= supporter bid,
// r1 <= winner bid, r2 <= supporter bid and winner != supporter, ordered by
// (winner, supporter, r1, r2). `candidates[b]` lists the reserves considered
// for buyer b (sorted).
std::vector<SubProfile> EnumerateSubprofiles(
    const BidDataset& dataset, std::size_t a,
    const std::vector<std::vector<Money>>& candidates);

// Convenience overload: every buyer uses `grid`, auxiliaries use {0}.
std::vector<SubProfile> EnumerateSubprofiles(const BidDataset& dataset,
                                             std::size_t a,
                                             const ReserveGrid& grid);

enum class GridMode {
  kGlobal,    // every bid in the dataset (the default)
  kPerBuyer,  // each buyer's own bids plus 0
};

struct LpModelOptions {
  GridMode grid_mode = GridMode::kGlobal;
  // Buyers bidding 0 everywhere keep reserve 0, like the auxiliaries.
  bool fix_zero_bidders = true;
  std::int64_t max_subprofiles = 500000;
  int threads = 1;
};

// A point of the LP in its full variable space (s, x, y, y').
struct LpPoint {
  std::vector<double> values;
};

struct LpSolution {
  lp::SolveStatus status = lp::SolveStatus::kIterationLimit;
  LpPoint point;
  double objective = 0.0;  // recomputed from the point, in money ticks
  double solver_objective = 0.0;
  std::int64_t iterations = 0;
  std::int64_t bland_iterations = 0;
  double max_violation = 0.0;  // of the full-form constraints
  double complementary_slackness = 0.0;
  int solved_rows = 0;
  int solved_cols = 0;
};

// Per-buyer probability mass over that buyer's candidate reserves.
struct ReserveMass {
  std::vector<Money> values;  // sorted ascending
  std::vector<double> probs;
};

// The sub-profile LP: variables s (one per sub-profile and auction),
// x_{b,r}, y_{b,r,a} and y'_{b,r,a}, with rows
//   y_{b,r,a}  = sum of s over sub-profiles where b wins with reserve r
//   y'_{b,r,a} = (1/k) sum of s over sub-profiles where b supports with r
//   y + y' <= x_{b,r}
//   sum of s with winner b2 and supporter b1 <= sum_r y'_{b1,r,a}
//   sum_p s_{a,p} <= k
//   sum_r x_{b,r} = 1
// maximizing sum_a weight_a sum_p revenue(p) s_{a,p}. Buyers with a single
// candidate (auxiliaries, fixed zero bidders) are pinned to it.
class LpModel {
 public:
  // Throws SizeGuardError when the sub-profile count exceeds the budget.
  LpModel(const BidDataset& dataset, const LpModelOptions& options = {});

  const BidDataset& dataset() const { return dataset_; }
  int num_items() const { return dataset_.num_items(); }
  std::size_t num_buyers() const { return dataset_.num_buyers(); }
  std::size_t num_auctions() const { return dataset_.num_auctions(); }

  const std::vector<Money>& candidates(std::size_t b) const {
    return candidates_[b];
  }
  bool is_fixed(std::size_t b) const { return fixed_[b]; }
  const std::vector<SubProfile>& subprofiles(std::size_t a) const {
    return subprofiles_[a];
  }
  std::size_t num_subprofiles() const;
  // Position of the sub-profile in subprofiles(a), or -1 if not enumerated.
  int FindSubprofile(std::size_t a, int winner, int supporter,
                     Money winner_reserve, Money supporter_reserve) const;

  // Variable indices in the full space.
  int num_vars() const { return num_vars_; }
  int s_index(std::size_t a, std::size_t i) const;
  int x_index(std::size_t b, std::size_t j) const;
  int y_index(std::size_t a, std::size_t b, std::size_t j) const;
  int yp_index(std::size_t a, std::size_t b, std::size_t j) const;
  std::string VariableName(int index) const;

  // The LP exactly as listed above.
  lp::StandardLp BuildFull() const;
  // Same optimum with y and y' substituted out and empty rows dropped; the
  // variables are s followed by x of non-fixed buyers.
  lp::StandardLp BuildReduced() const;

  // Solves the reduced form and expands the result to the full space.
  // Infeasible or unbounded results throw SolverError; an iteration limit is
  // reported through the status.
  LpSolution Solve(const lp::SolveLimits& limits = {}) const;
  // Solves the full form directly; used to cross-check the reduction.
  LpSolution SolveFull(const lp::SolveLimits& limits = {}) const;

  // Fills y and y' from s, and x of fixed buyers.
  LpPoint CompleteFromSx(std::vector<double> values) const;

  double Objective(const LpPoint& point) const;
  double MaxViolation(const LpPoint& point) const;

  // The integral point of an actual run of the mechanism: s = 1 on every
  // sub-profile that happens, x/y/y' the matching indicators. Every reserve
  // must be one of the buyer's candidates (zero bidders pinned to 0 are
  // mapped to 0 first, which changes no outcome).
  LpPoint EncodeReserves(const ReserveVector& reserves) const;

  std::vector<ReserveMass> Masses(const LpPoint& point) const;

  // CPLEX LP text of the full form.
  void WriteLpFormat(std::ostream& out) const;

 private:
  LpSolution Expand(const lp::SolveResult& result, const lp::StandardLp& lp,
                    bool reduced) const;

  BidDataset dataset_;
  std::vector<std::vector<Money>> candidates_;
  std::vector<bool> fixed_;
  std::vector<std::vector<SubProfile>> subprofiles_;
  // Candidate indices of (winner_reserve, supporter_reserve), aligned with
  // subprofiles_.
  std::vector<std::vector<std::pair<int, int>>> reserve_idx_;
  std::vector<int> s_offset_;
  std::vector<int> cand_offset_;
  int num_cands_ = 0;
  int x_base_ = 0;
  int y_base_ = 0;
  int yp_base_ = 0;
  int num_vars_ = 0;
};

}  // namespace evcg

#endif  // EVCG_LP_MODEL_H_
