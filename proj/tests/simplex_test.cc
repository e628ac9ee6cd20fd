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

#include "evcg/simplex.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "evcg/counter_rng.h"
#include "evcg/errors.h"

namespace evcg::lp {
namespace {

TEST(SimplexTest, SingleBound) {
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {1.0};
  lp.le_rows = {{{0, 1.0}}};
  lp.le_rhs = {3.0};
  SolveResult r = Solve(lp);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 3.0, 1e-12);
}

TEST(SimplexTest, EqualityRow) {
  StandardLp lp;
  lp.num_vars = 2;
  lp.objective = {1.0, 1.0};
  lp.eq_rows = {{{0, 1.0}, {1, 1.0}}};
  lp.eq_rhs = {1.0};
  SolveResult r = Solve(lp);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 1.0, 1e-12);
  EXPECT_LE(r.max_primal_violation, 1e-12);
}

TEST(SimplexTest, Unbounded) {
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {1.0};
  lp.le_rows = {{{0, -1.0}}};
  lp.le_rhs = {1.0};
  EXPECT_EQ(Solve(lp).status, SolveStatus::kUnbounded);
}

TEST(SimplexTest, Infeasible) {
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {1.0};
  lp.eq_rows = {{{0, 1.0}}};
  lp.eq_rhs = {2.0};
  lp.le_rows = {{{0, 1.0}}};
  lp.le_rhs = {1.0};
  EXPECT_EQ(Solve(lp).status, SolveStatus::kInfeasible);
}

TEST(SimplexTest, NegativeRhsNeedsPhaseOne) {
  // max -x  s.t.  -x <= -2  ->  x = 2.
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {-1.0};
  lp.le_rows = {{{0, -1.0}}};
  lp.le_rhs = {-2.0};
  SolveResult r = Solve(lp);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal[0], 2.0, 1e-12);
}

TEST(SimplexTest, RedundantEqualities) {
  StandardLp lp;
  lp.num_vars = 2;
  lp.objective = {2.0, 1.0};
  lp.eq_rows = {{{0, 1.0}, {1, 1.0}}, {{0, 2.0}, {1, 2.0}}};
  lp.eq_rhs = {1.0, 2.0};
  SolveResult r = Solve(lp);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(SimplexTest, RejectsMalformedInput) {
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {1.0, 2.0};
  EXPECT_THROW(Solve(lp), ValidationError);
  lp.objective = {1.0};
  lp.le_rows = {{{3, 1.0}}};
  lp.le_rhs = {1.0};
  EXPECT_THROW(Solve(lp), ValidationError);
  lp.le_rows = {{{0, NAN}}};
  EXPECT_THROW(Solve(lp), ValidationError);
}

TEST(SimplexTest, SizeGuard) {
  StandardLp lp;
  lp.num_vars = 1;
  lp.objective = {1.0};
  for (int i = 0; i < 5; ++i) {
    lp.le_rows.push_back({{0, 1.0}});
    lp.le_rhs.push_back(1.0);
  }
  SolveLimits limits;
  limits.max_rows = 4;
  EXPECT_THROW(Solve(lp, limits), SizeGuardError);
}

TEST(SimplexTest, IterationLimitIsReported) {
  StandardLp lp;
  lp.num_vars = 2;
  lp.objective = {1.0, 1.0};
  lp.le_rows = {{{0, 1.0}}, {{1, 1.0}}};
  lp.le_rhs = {1.0, 1.0};
  SolveLimits limits;
  limits.max_iterations = 1;
  EXPECT_EQ(Solve(lp, limits).status, SolveStatus::kIterationLimit);
}

// Builds an LP whose optimum is known by construction: pick x* and duals,
// then choose right-hand sides and costs so the KKT conditions hold.
struct Planted {
  StandardLp lp;
  double optimum = 0.0;
};

Planted MakePlanted(std::uint64_t seed) {
  CounterRng rng(seed);
  std::uint64_t c = 0;
  auto u = [&] { return rng.Uniform(0, c++); };
  const int n = 3 + static_cast<int>(rng.Below(15, 0, c++));
  const int meq = static_cast<int>(rng.Below(3, 0, c++));
  const int mle = 2 + static_cast<int>(rng.Below(12, 0, c++));
  std::vector<double> x(n), z(n);
  for (int j = 0; j < n; ++j) {
    if (u() < 0.5) {
      x[j] = 1.0 + 4.0 * u();
    } else {
      z[j] = 0.5 + u();
    }
  }
  Planted p;
  p.lp.num_vars = n;
  std::vector<double> cost(n, 0.0);
  auto random_row = [&](std::vector<double>& dense) {
    SparseRow row;
    for (int j = 0; j < n; ++j) {
      if (u() < 0.5) {
        const double v = std::round((u() * 10.0 - 3.0) * 4.0) / 4.0;
        if (v != 0.0) row.push_back({j, v});
      }
    }
    dense.assign(n, 0.0);
    for (const Term& t : row) dense[t.col] = t.coef;
    return row;
  };
  std::vector<double> dense;
  for (int i = 0; i < meq; ++i) {
    SparseRow row = random_row(dense);
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) lhs += dense[j] * x[j];
    const double y = u() * 4.0 - 2.0;
    for (int j = 0; j < n; ++j) cost[j] += y * dense[j];
    p.lp.eq_rows.push_back(row);
    p.lp.eq_rhs.push_back(lhs);
    p.optimum += y * lhs;
  }
  for (int i = 0; i < mle; ++i) {
    SparseRow row = random_row(dense);
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) lhs += dense[j] * x[j];
    const bool tight = u() < 0.5;
    const double y = tight ? 0.5 + u() : 0.0;
    const double rhs = tight ? lhs : lhs + 0.5 + u();
    for (int j = 0; j < n; ++j) cost[j] += y * dense[j];
    p.lp.le_rows.push_back(row);
    p.lp.le_rhs.push_back(rhs);
    p.optimum += y * rhs;
  }
  // Keep the feasible region bounded so no unbounded ray sneaks in.
  SparseRow box;
  for (int j = 0; j < n; ++j) box.push_back({j, 1.0});
  double sum = 0.0;
  for (double v : x) sum += v;
  p.lp.le_rows.push_back(box);
  p.lp.le_rhs.push_back(sum + 1.0);
  for (int j = 0; j < n; ++j) cost[j] -= z[j];
  p.lp.objective = cost;
  return p;
}

TEST(SimplexTest, PlantedOptima) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Planted p = MakePlanted(seed);
    SolveResult r = Solve(p.lp);
    ASSERT_EQ(r.status, SolveStatus::kOptimal) << "seed " << seed;
    EXPECT_NEAR(r.objective, p.optimum, 1e-7 * (1.0 + std::abs(p.optimum)))
        << "seed " << seed;
    EXPECT_LE(r.max_primal_violation, 1e-7) << "seed " << seed;
    EXPECT_LE(MaxViolation(p.lp, r.primal), 1e-7);
    EXPECT_LE(r.complementary_slackness, 1e-6) << "seed " << seed;
  }
}

TEST(SimplexTest, DegenerateCyclingExample) {
  // Beale's example cycles under Dantzig's rule without a fallback.
  StandardLp lp;
  lp.num_vars = 4;
  lp.objective = {0.75, -150.0, 0.02, -6.0};
  lp.le_rows = {{{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}},
                {{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}},
                {{2, 1.0}}};
  lp.le_rhs = {0.0, 0.0, 1.0};
  SolveLimits limits;
  limits.stall_threshold = 3;
  SolveResult r = Solve(lp, limits);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.05, 1e-9);
}

TEST(SimplexTest, DeterministicRepeat) {
  Planted p = MakePlanted(42);
  SolveResult a = Solve(p.lp);
  SolveResult b = Solve(p.lp);
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace evcg::lp
