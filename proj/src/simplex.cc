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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "evcg/errors.h"

namespace evcg::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kSingularTol = 1e-12;

struct Column {
  std::vector<int> rows;
  std::vector<double> vals;
};

enum class PhaseStatus { kOptimal, kUnbounded, kIterationLimit };

class RevisedSimplex {
 public:
  RevisedSimplex(const StandardLp& lp, const SolveLimits& limits)
      : lp_(lp), limits_(limits) {
    m_ = lp.num_rows();
    n_struct_ = lp.num_vars;
    cols_.resize(static_cast<size_t>(n_struct_));
    b_.resize(static_cast<size_t>(m_));
    row_sign_.assign(static_cast<size_t>(m_), 1.0);

    const int neq = static_cast<int>(lp.eq_rows.size());
    auto add_row = [&](int row, const SparseRow& terms, double rhs) {
      const double sign = rhs < 0 ? -1.0 : 1.0;
      row_sign_[row] = sign;
      b_[row] = sign * rhs;
      for (const Term& t : terms) {
        if (t.coef == 0.0) continue;
        cols_[t.col].rows.push_back(row);
        cols_[t.col].vals.push_back(sign * t.coef);
      }
    };
    for (int i = 0; i < neq; ++i) add_row(i, lp.eq_rows[i], lp.eq_rhs[i]);
    for (size_t i = 0; i < lp.le_rows.size(); ++i) {
      add_row(neq + static_cast<int>(i), lp.le_rows[i], lp.le_rhs[i]);
    }
    // Merge duplicate entries within a column so each row appears once.
    for (Column& c : cols_) Canonicalize(c);

    basis_.assign(static_cast<size_t>(m_), -1);
    // Slack columns for <= rows; +1 keeps the row, -1 if it was flipped.
    for (size_t i = 0; i < lp.le_rows.size(); ++i) {
      const int row = neq + static_cast<int>(i);
      Column slack;
      slack.rows.push_back(row);
      slack.vals.push_back(row_sign_[row]);
      slack_of_row_.push_back(static_cast<int>(cols_.size()));
      if (row_sign_[row] > 0) basis_[row] = static_cast<int>(cols_.size());
      cols_.push_back(std::move(slack));
      artificial_.push_back(false);
    }
    artificial_.insert(artificial_.begin(), static_cast<size_t>(n_struct_),
                       false);
    for (int row = 0; row < m_; ++row) {
      if (basis_[row] >= 0) continue;
      Column art;
      art.rows.push_back(row);
      art.vals.push_back(1.0);
      basis_[row] = static_cast<int>(cols_.size());
      cols_.push_back(std::move(art));
      artificial_.push_back(true);
      ++num_artificial_;
    }
    n_total_ = static_cast<int>(cols_.size());
    position_.assign(static_cast<size_t>(n_total_), -1);
    for (int row = 0; row < m_; ++row) position_[basis_[row]] = row;
    binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
    for (int row = 0; row < m_; ++row) binv_[Idx(row, row)] = 1.0;
    xb_ = b_;
  }

  SolveResult Run() {
    SolveResult result;
    if (num_artificial_ > 0) {
      std::vector<double> cost(static_cast<size_t>(n_total_), 0.0);
      for (int j = 0; j < n_total_; ++j) {
        if (artificial_[j]) cost[j] = -1.0;
      }
      const PhaseStatus phase1 = Iterate(cost, /*allow_artificial=*/true);
      if (phase1 == PhaseStatus::kIterationLimit) {
        return Finish(SolveStatus::kIterationLimit);
      }
      double infeasibility = 0.0;
      for (int row = 0; row < m_; ++row) {
        if (artificial_[basis_[row]]) infeasibility += std::max(0.0, xb_[row]);
      }
      double scale = 1.0;
      for (double v : b_) scale = std::max(scale, std::abs(v));
      if (infeasibility > limits_.feasibility_tol * scale) {
        return Finish(SolveStatus::kInfeasible);
      }
      DriveOutArtificials();
    }
    std::vector<double> cost(static_cast<size_t>(n_total_), 0.0);
    for (int j = 0; j < n_struct_; ++j) cost[j] = lp_.objective[j];
    const PhaseStatus phase2 = Iterate(cost, /*allow_artificial=*/false);
    switch (phase2) {
      case PhaseStatus::kUnbounded:
        return Finish(SolveStatus::kUnbounded);
      case PhaseStatus::kIterationLimit:
        return Finish(SolveStatus::kIterationLimit);
      case PhaseStatus::kOptimal:
        break;
    }
    Refactor();
    return Finish(SolveStatus::kOptimal, &cost);
  }

 private:
  size_t Idx(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(m_) +
           static_cast<size_t>(c);
  }

  static void Canonicalize(Column& c) {
    if (c.rows.size() < 2) return;
    std::vector<std::pair<int, double>> entries;
    for (size_t i = 0; i < c.rows.size(); ++i) {
      entries.emplace_back(c.rows[i], c.vals[i]);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    c.rows.clear();
    c.vals.clear();
    for (const auto& [row, val] : entries) {
      if (!c.rows.empty() && c.rows.back() == row) {
        c.vals.back() += val;
      } else {
        c.rows.push_back(row);
        c.vals.push_back(val);
      }
    }
    size_t keep = 0;
    for (size_t i = 0; i < c.rows.size(); ++i) {
      if (c.vals[i] == 0.0) continue;
      c.rows[keep] = c.rows[i];
      c.vals[keep] = c.vals[i];
      ++keep;
    }
    c.rows.resize(keep);
    c.vals.resize(keep);
  }

  void Refactor() {
    const size_t mm = static_cast<size_t>(m_);
    std::vector<double> work(mm * 2 * mm, 0.0);
    const size_t width = 2 * mm;
    for (int row = 0; row < m_; ++row) {
      const Column& c = cols_[basis_[row]];
      for (size_t e = 0; e < c.rows.size(); ++e) {
        work[static_cast<size_t>(c.rows[e]) * width + row] = c.vals[e];
      }
      work[static_cast<size_t>(row) * width + mm + row] = 1.0;
    }
    for (size_t col = 0; col < mm; ++col) {
      size_t pivot = col;
      double best = std::abs(work[col * width + col]);
      for (size_t r = col + 1; r < mm; ++r) {
        const double v = std::abs(work[r * width + col]);
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
      if (best < kSingularTol) throw SolverError("singular basis in refactor");
      if (pivot != col) {
        std::swap_ranges(work.begin() + pivot * width,
                         work.begin() + (pivot + 1) * width,
                         work.begin() + col * width);
      }
      const double inv = 1.0 / work[col * width + col];
      for (size_t c = 0; c < width; ++c) work[col * width + c] *= inv;
      for (size_t r = 0; r < mm; ++r) {
        if (r == col) continue;
        const double f = work[r * width + col];
        if (f == 0.0) continue;
        for (size_t c = col; c < width; ++c) {
          work[r * width + c] -= f * work[col * width + c];
        }
      }
    }
    for (size_t r = 0; r < mm; ++r) {
      std::copy(work.begin() + r * width + mm, work.begin() + (r + 1) * width,
                binv_.begin() + r * mm);
    }
    for (int r = 0; r < m_; ++r) {
      double v = 0.0;
      for (int c = 0; c < m_; ++c) v += binv_[Idx(r, c)] * b_[c];
      xb_[r] = v;
    }
    since_refactor_ = 0;
  }

  // alpha = B^-1 * A_j
  void Ftran(int j, std::vector<double>& alpha) const {
    alpha.assign(static_cast<size_t>(m_), 0.0);
    const Column& c = cols_[j];
    for (size_t e = 0; e < c.rows.size(); ++e) {
      const int row = c.rows[e];
      const double v = c.vals[e];
      for (int r = 0; r < m_; ++r) alpha[r] += binv_[Idx(r, row)] * v;
    }
  }

  void Pivot(int leave_row, int enter, const std::vector<double>& alpha,
             double theta) {
    const double piv = alpha[leave_row];
    double* prow = &binv_[Idx(leave_row, 0)];
    for (int c = 0; c < m_; ++c) prow[c] /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == leave_row || alpha[r] == 0.0) continue;
      const double f = alpha[r];
      double* row = &binv_[Idx(r, 0)];
      for (int c = 0; c < m_; ++c) row[c] -= f * prow[c];
      xb_[r] -= f * theta;
    }
    xb_[leave_row] = theta;
    position_[basis_[leave_row]] = -1;
    basis_[leave_row] = enter;
    position_[enter] = leave_row;
    ++since_refactor_;
  }

  PhaseStatus Iterate(const std::vector<double>& cost, bool allow_artificial) {
    std::vector<double> pi(static_cast<size_t>(m_));
    std::vector<double> alpha;
    bool bland = false;
    int stalled = 0;
    while (true) {
      if (iterations_ >= limits_.max_iterations) {
        return PhaseStatus::kIterationLimit;
      }
      if (since_refactor_ >= limits_.refactor_interval) Refactor();

      std::fill(pi.begin(), pi.end(), 0.0);
      for (int r = 0; r < m_; ++r) {
        const double cb = cost[basis_[r]];
        if (cb == 0.0) continue;
        const double* row = &binv_[Idx(r, 0)];
        for (int c = 0; c < m_; ++c) pi[c] += cb * row[c];
      }

      int enter = -1;
      double best = limits_.optimality_tol;
      for (int j = 0; j < n_total_; ++j) {
        if (position_[j] >= 0) continue;
        if (artificial_[j] && !allow_artificial) continue;
        const Column& c = cols_[j];
        double d = cost[j];
        for (size_t e = 0; e < c.rows.size(); ++e) d -= pi[c.rows[e]] * c.vals[e];
        if (d > best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return PhaseStatus::kOptimal;
      const double reduced = bland ? ReducedCost(cost, pi, enter) : best;

      Ftran(enter, alpha);
      int leave = -1;
      double theta = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        if (alpha[r] <= kPivotTol) continue;
        const double ratio = std::max(xb_[r], 0.0) / alpha[r];
        if (leave < 0 || ratio < theta - 1e-12) {
          leave = r;
          theta = ratio;
        } else if (ratio <= theta + 1e-12) {
          const bool better = bland ? basis_[r] < basis_[leave]
                                    : alpha[r] > alpha[leave];
          if (better) {
            leave = r;
            theta = std::min(theta, ratio);
          }
        }
      }
      if (leave < 0) return PhaseStatus::kUnbounded;

      if (reduced * theta <= 1e-12) {
        if (++stalled > limits_.stall_threshold) bland = true;
      } else {
        stalled = 0;
        bland = false;
      }
      if (bland) ++bland_iterations_;
      Pivot(leave, enter, alpha, theta);
      ++iterations_;
    }
  }

  double ReducedCost(const std::vector<double>& cost,
                     const std::vector<double>& pi, int j) const {
    const Column& c = cols_[j];
    double d = cost[j];
    for (size_t e = 0; e < c.rows.size(); ++e) d -= pi[c.rows[e]] * c.vals[e];
    return d;
  }

  void DriveOutArtificials() {
    std::vector<double> alpha;
    for (int r = 0; r < m_; ++r) {
      if (!artificial_[basis_[r]]) continue;
      xb_[r] = 0.0;
      const double* brow = &binv_[Idx(r, 0)];
      int enter = -1;
      double best = kPivotTol;
      for (int j = 0; j < n_total_; ++j) {
        if (artificial_[j] || position_[j] >= 0) continue;
        const Column& c = cols_[j];
        double v = 0.0;
        for (size_t e = 0; e < c.rows.size(); ++e) v += brow[c.rows[e]] * c.vals[e];
        if (std::abs(v) > best) {
          best = std::abs(v);
          enter = j;
        }
      }
      // No candidate means the row is redundant; the artificial stays at 0.
      if (enter < 0) continue;
      Ftran(enter, alpha);
      Pivot(r, enter, alpha, 0.0);
    }
    Refactor();
  }

  SolveResult Finish(SolveStatus status, const std::vector<double>* cost = nullptr) {
    SolveResult result;
    result.status = status;
    result.iterations = iterations_;
    result.bland_iterations = bland_iterations_;
    result.primal.assign(static_cast<size_t>(n_struct_), 0.0);
    for (int r = 0; r < m_; ++r) {
      const int j = basis_[r];
      if (j < n_struct_) result.primal[j] = std::max(0.0, xb_[r]);
    }
    double obj = 0.0;
    for (int j = 0; j < n_struct_; ++j) obj += lp_.objective[j] * result.primal[j];
    result.objective = obj;
    result.max_primal_violation = MaxViolation(lp_, result.primal);
    if (cost != nullptr) {
      std::vector<double> pi(static_cast<size_t>(m_), 0.0);
      for (int r = 0; r < m_; ++r) {
        const double cb = (*cost)[basis_[r]];
        if (cb == 0.0) continue;
        for (int c = 0; c < m_; ++c) pi[c] += cb * binv_[Idx(r, c)];
      }
      result.duals.resize(static_cast<size_t>(m_));
      for (int r = 0; r < m_; ++r) result.duals[r] = pi[r] * row_sign_[r];
      double cs = 0.0;
      for (int j = 0; j < n_struct_; ++j) {
        cs += std::abs(result.primal[j] * ReducedCost(*cost, pi, j));
      }
      const int neq = static_cast<int>(lp_.eq_rows.size());
      for (size_t i = 0; i < lp_.le_rows.size(); ++i) {
        double lhs = 0.0;
        for (const Term& t : lp_.le_rows[i]) lhs += t.coef * result.primal[t.col];
        cs += std::abs(result.duals[neq + i] * (lp_.le_rhs[i] - lhs));
      }
      result.complementary_slackness = cs;
    }
    return result;
  }

  const StandardLp& lp_;
  const SolveLimits& limits_;
  int m_ = 0;
  int n_struct_ = 0;
  int n_total_ = 0;
  int num_artificial_ = 0;
  std::vector<Column> cols_;
  std::vector<double> b_;
  std::vector<double> row_sign_;
  std::vector<bool> artificial_;
  std::vector<int> slack_of_row_;
  std::vector<int> basis_;
  std::vector<int> position_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::int64_t iterations_ = 0;
  std::int64_t bland_iterations_ = 0;
  int since_refactor_ = 0;
};

}  // namespace

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

void StandardLp::Validate() const {
  if (num_vars < 0) throw ValidationError("negative variable count");
  if (objective.size() != static_cast<size_t>(num_vars)) {
    throw ValidationError("objective has " + std::to_string(objective.size()) +
                          " entries, expected " + std::to_string(num_vars));
  }
  if (eq_rows.size() != eq_rhs.size() || le_rows.size() != le_rhs.size()) {
    throw ValidationError("row and right-hand-side counts differ");
  }
  auto check_rows = [&](const std::vector<SparseRow>& rows,
                        const std::vector<double>& rhs) {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!std::isfinite(rhs[i])) throw ValidationError("non-finite rhs");
      for (const Term& t : rows[i]) {
        if (t.col < 0 || t.col >= num_vars) {
          throw ValidationError("column index " + std::to_string(t.col) +
                                " out of range");
        }
        if (!std::isfinite(t.coef)) throw ValidationError("non-finite coefficient");
      }
    }
  };
  check_rows(eq_rows, eq_rhs);
  check_rows(le_rows, le_rhs);
  for (double c : objective) {
    if (!std::isfinite(c)) throw ValidationError("non-finite objective");
  }
}

SolveResult Solve(const StandardLp& lp, const SolveLimits& limits) {
  lp.Validate();
  if (lp.num_rows() > limits.max_rows) {
    throw SizeGuardError("LP has " + std::to_string(lp.num_rows()) +
                         " rows; the solver cap is " +
                         std::to_string(limits.max_rows));
  }
  RevisedSimplex simplex(lp, limits);
  return simplex.Run();
}

double MaxViolation(const StandardLp& lp, std::span<const double> x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (size_t i = 0; i < lp.eq_rows.size(); ++i) {
    double lhs = 0.0;
    for (const Term& t : lp.eq_rows[i]) lhs += t.coef * x[t.col];
    worst = std::max(worst, std::abs(lhs - lp.eq_rhs[i]));
  }
  for (size_t i = 0; i < lp.le_rows.size(); ++i) {
    double lhs = 0.0;
    for (const Term& t : lp.le_rows[i]) lhs += t.coef * x[t.col];
    worst = std::max(worst, lhs - lp.le_rhs[i]);
  }
  return worst;
}

}  // namespace evcg::lp
