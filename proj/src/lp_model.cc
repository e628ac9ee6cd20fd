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

#include "evcg/lp_model.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>

#include "evcg/auction.h"
#include "evcg/errors.h"
#include "evcg/parallel.h"

namespace evcg {
namespace {

// Number of candidates not exceeding `limit` in a sorted list.
int CountAtMost(const std::vector<Money>& sorted, Money limit) {
  return static_cast<int>(
      std::upper_bound(sorted.begin(), sorted.end(), limit) - sorted.begin());
}

std::vector<std::vector<Money>> UniformCandidates(const BidDataset& dataset,
                                                  const ReserveGrid& grid) {
  std::vector<std::vector<Money>> out(dataset.num_buyers(), grid.values());
  for (size_t b = 0; b < dataset.num_buyers(); ++b) {
    if (dataset.is_auxiliary(b)) out[b] = {kZeroMoney};
  }
  return out;
}

void Enumerate(const BidDataset& dataset, std::size_t a,
               const std::vector<std::vector<Money>>& candidates,
               std::vector<SubProfile>* profiles,
               std::vector<std::pair<int, int>>* indices) {
  const size_t n = dataset.num_buyers();
  for (size_t w = 0; w < n; ++w) {
    const Money wbid = dataset.bid(a, w);
    const int nw = CountAtMost(candidates[w], wbid);
    if (nw == 0) continue;
    for (size_t s = 0; s < n; ++s) {
      if (s == w) continue;
      const Money sbid = dataset.bid(a, s);
      if (sbid > wbid) continue;
      const int ns = CountAtMost(candidates[s], sbid);
      for (int j1 = 0; j1 < nw; ++j1) {
        const Money r1 = candidates[w][j1];
        for (int j2 = 0; j2 < ns; ++j2) {
          profiles->push_back(SubProfile{static_cast<int>(w),
                                         static_cast<int>(s), r1,
                                         candidates[s][j2], std::max(sbid, r1)});
          if (indices != nullptr) indices->emplace_back(j1, j2);
        }
      }
    }
  }
}

std::string FormatCoef(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<SubProfile> EnumerateSubprofiles(
    const BidDataset& dataset, std::size_t a,
    const std::vector<std::vector<Money>>& candidates) {
  if (!dataset.includes_auxiliaries()) {
    throw ValidationError("sub-profile enumeration needs auxiliary buyers");
  }
  if (a >= dataset.num_auctions()) throw ValidationError("auction index out of range");
  if (candidates.size() != dataset.num_buyers()) {
    throw ValidationError("one candidate list per buyer required");
  }
  std::vector<SubProfile> out;
  Enumerate(dataset, a, candidates, &out, nullptr);
  return out;
}

std::vector<SubProfile> EnumerateSubprofiles(const BidDataset& dataset,
                                             std::size_t a,
                                             const ReserveGrid& grid) {
  return EnumerateSubprofiles(dataset, a, UniformCandidates(dataset, grid));
}

LpModel::LpModel(const BidDataset& dataset, const LpModelOptions& options)
    : dataset_(dataset) {
  if (!dataset_.includes_auxiliaries()) {
    throw ValidationError("the LP needs a dataset with auxiliary buyers");
  }
  const size_t n = dataset_.num_buyers();
  const size_t m = dataset_.num_auctions();
  const ReserveGrid global = ReserveGrid::FromDataset(dataset_);
  candidates_.resize(n);
  fixed_.assign(n, false);
  for (size_t b = 0; b < n; ++b) {
    const bool zero_bidder = dataset_.max_bid(b) == kZeroMoney;
    if (dataset_.is_auxiliary(b) || (options.fix_zero_bidders && zero_bidder)) {
      fixed_[b] = true;
      candidates_[b] = {kZeroMoney};
    } else if (options.grid_mode == GridMode::kPerBuyer) {
      candidates_[b] = ReserveGrid::ForBuyer(dataset_, b).values();
    } else {
      candidates_[b] = global.values();
    }
  }

  // Count first so an oversized instance is refused before allocating.
  std::int64_t total = 0;
  for (size_t a = 0; a < m; ++a) {
    for (size_t w = 0; w < n; ++w) {
      const Money wbid = dataset_.bid(a, w);
      const std::int64_t nw = CountAtMost(candidates_[w], wbid);
      for (size_t s = 0; s < n && nw > 0; ++s) {
        if (s == w || dataset_.bid(a, s) > wbid) continue;
        total += nw * CountAtMost(candidates_[s], dataset_.bid(a, s));
      }
      if (total > options.max_subprofiles) {
        throw SizeGuardError("instance has more than " +
                             std::to_string(options.max_subprofiles) +
                             " sub-profiles; raise --max-subprofiles to allow it");
      }
    }
  }

  subprofiles_.resize(m);
  reserve_idx_.resize(m);
  ParallelFor(m, options.threads, [&](size_t a) {
    Enumerate(dataset_, a, candidates_, &subprofiles_[a], &reserve_idx_[a]);
  });

  s_offset_.resize(m + 1, 0);
  for (size_t a = 0; a < m; ++a) {
    s_offset_[a + 1] = s_offset_[a] + static_cast<int>(subprofiles_[a].size());
  }
  cand_offset_.resize(n + 1, 0);
  for (size_t b = 0; b < n; ++b) {
    cand_offset_[b + 1] = cand_offset_[b] + static_cast<int>(candidates_[b].size());
  }
  num_cands_ = cand_offset_[n];
  x_base_ = s_offset_[m];
  y_base_ = x_base_ + num_cands_;
  yp_base_ = y_base_ + static_cast<int>(m) * num_cands_;
  num_vars_ = yp_base_ + static_cast<int>(m) * num_cands_;
}

std::size_t LpModel::num_subprofiles() const {
  return static_cast<size_t>(s_offset_.back());
}

int LpModel::FindSubprofile(std::size_t a, int winner, int supporter,
                            Money winner_reserve, Money supporter_reserve) const {
  const auto key = std::make_tuple(winner, supporter, winner_reserve, supporter_reserve);
  const auto& profiles = subprofiles_.at(a);
  const auto it = std::lower_bound(
      profiles.begin(), profiles.end(), key, [](const SubProfile& p, const auto& k) {
        return std::make_tuple(p.winner, p.supporter, p.winner_reserve,
                               p.supporter_reserve) < k;
      });
  if (it == profiles.end() ||
      std::make_tuple(it->winner, it->supporter, it->winner_reserve,
                      it->supporter_reserve) != key) {
    return -1;
  }
  return static_cast<int>(it - profiles.begin());
}

int LpModel::s_index(std::size_t a, std::size_t i) const {
  return s_offset_[a] + static_cast<int>(i);
}
int LpModel::x_index(std::size_t b, std::size_t j) const {
  return x_base_ + cand_offset_[b] + static_cast<int>(j);
}
int LpModel::y_index(std::size_t a, std::size_t b, std::size_t j) const {
  return y_base_ + static_cast<int>(a) * num_cands_ + cand_offset_[b] +
         static_cast<int>(j);
}
int LpModel::yp_index(std::size_t a, std::size_t b, std::size_t j) const {
  return yp_base_ + static_cast<int>(a) * num_cands_ + cand_offset_[b] +
         static_cast<int>(j);
}

std::string LpModel::VariableName(int index) const {
  if (index < 0 || index >= num_vars_) throw ValidationError("variable out of range");
  const int scale = dataset_.scale();
  auto buyer_cand = [&](int flat, size_t* b, size_t* j) {
    *b = static_cast<size_t>(
        std::upper_bound(cand_offset_.begin(), cand_offset_.end(), flat) -
        cand_offset_.begin() - 1);
    *j = static_cast<size_t>(flat - cand_offset_[*b]);
  };
  if (index < x_base_) {
    const size_t a = static_cast<size_t>(
        std::upper_bound(s_offset_.begin(), s_offset_.end(), index) -
        s_offset_.begin() - 1);
    return "s_" + std::to_string(a) + "_" + std::to_string(index - s_offset_[a]);
  }
  size_t b = 0, j = 0;
  if (index < y_base_) {
    buyer_cand(index - x_base_, &b, &j);
    return "x_" + std::to_string(b) + "_" + FormatDecimal(candidates_[b][j], scale);
  }
  const bool prime = index >= yp_base_;
  const int rel = index - (prime ? yp_base_ : y_base_);
  const int a = rel / num_cands_;
  buyer_cand(rel % num_cands_, &b, &j);
  return std::string(prime ? "yp_" : "y_") + std::to_string(b) + "_" +
         FormatDecimal(candidates_[b][j], scale) + "_" + std::to_string(a);
}

lp::StandardLp LpModel::BuildFull() const {
  const size_t n = num_buyers();
  const size_t m = num_auctions();
  const double inv_k = 1.0 / num_items();
  lp::StandardLp lp;
  lp.num_vars = num_vars_;
  lp.objective.assign(static_cast<size_t>(num_vars_), 0.0);
  for (size_t a = 0; a < m; ++a) {
    const double w = static_cast<double>(dataset_.weight(a));
    for (size_t i = 0; i < subprofiles_[a].size(); ++i) {
      lp.objective[s_index(a, i)] = w * subprofiles_[a][i].revenue.AsDouble();
    }
  }
  for (size_t a = 0; a < m; ++a) {
    const auto& profiles = subprofiles_[a];
    std::vector<lp::SparseRow> win(static_cast<size_t>(num_cands_));
    std::vector<lp::SparseRow> support(static_cast<size_t>(num_cands_));
    std::vector<lp::SparseRow> pair(n * n);
    for (size_t i = 0; i < profiles.size(); ++i) {
      const SubProfile& p = profiles[i];
      const auto [j1, j2] = reserve_idx_[a][i];
      const int col = s_index(a, i);
      win[cand_offset_[p.winner] + j1].push_back({col, -1.0});
      support[cand_offset_[p.supporter] + j2].push_back({col, -inv_k});
      // Row (b1 = supporter, b2 = winner).
      pair[static_cast<size_t>(p.supporter) * n + p.winner].push_back({col, 1.0});
    }
    for (size_t b = 0; b < n; ++b) {
      for (size_t j = 0; j < candidates_[b].size(); ++j) {
        const int c = cand_offset_[b] + static_cast<int>(j);
        lp::SparseRow y_row = win[c];
        y_row.push_back({y_index(a, b, j), 1.0});
        lp.eq_rows.push_back(std::move(y_row));
        lp.eq_rhs.push_back(0.0);
        lp::SparseRow yp_row = support[c];
        yp_row.push_back({yp_index(a, b, j), 1.0});
        lp.eq_rows.push_back(std::move(yp_row));
        lp.eq_rhs.push_back(0.0);
        lp.le_rows.push_back({{y_index(a, b, j), 1.0},
                              {yp_index(a, b, j), 1.0},
                              {x_index(b, j), -1.0}});
        lp.le_rhs.push_back(0.0);
      }
    }
    for (size_t b1 = 0; b1 < n; ++b1) {
      for (size_t b2 = 0; b2 < n; ++b2) {
        lp::SparseRow row = pair[b1 * n + b2];
        for (size_t j = 0; j < candidates_[b1].size(); ++j) {
          row.push_back({yp_index(a, b1, j), -1.0});
        }
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.push_back(0.0);
      }
    }
    lp::SparseRow cap;
    for (size_t i = 0; i < profiles.size(); ++i) cap.push_back({s_index(a, i), 1.0});
    lp.le_rows.push_back(std::move(cap));
    lp.le_rhs.push_back(static_cast<double>(num_items()));
  }
  for (size_t b = 0; b < n; ++b) {
    lp::SparseRow row;
    for (size_t j = 0; j < candidates_[b].size(); ++j) row.push_back({x_index(b, j), 1.0});
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }
  return lp;
}

lp::StandardLp LpModel::BuildReduced() const {
  const size_t n = num_buyers();
  const size_t m = num_auctions();
  const double inv_k = 1.0 / num_items();
  const int num_s = x_base_;
  // Reduced x columns follow the s columns, non-fixed buyers only.
  std::vector<int> x_col(static_cast<size_t>(num_cands_), -1);
  int cols = num_s;
  for (size_t b = 0; b < n; ++b) {
    if (fixed_[b]) continue;
    for (size_t j = 0; j < candidates_[b].size(); ++j) x_col[cand_offset_[b] + j] = cols++;
  }
  lp::StandardLp lp;
  lp.num_vars = cols;
  lp.objective.assign(static_cast<size_t>(cols), 0.0);
  for (size_t a = 0; a < m; ++a) {
    const double w = static_cast<double>(dataset_.weight(a));
    for (size_t i = 0; i < subprofiles_[a].size(); ++i) {
      lp.objective[s_index(a, i)] = w * subprofiles_[a][i].revenue.AsDouble();
    }
  }
  for (size_t a = 0; a < m; ++a) {
    const auto& profiles = subprofiles_[a];
    std::vector<lp::SparseRow> usage(static_cast<size_t>(num_cands_));
    std::vector<lp::SparseRow> supported(n);
    std::vector<lp::SparseRow> pair(n * n);
    for (size_t i = 0; i < profiles.size(); ++i) {
      const SubProfile& p = profiles[i];
      const auto [j1, j2] = reserve_idx_[a][i];
      const int col = s_index(a, i);
      usage[cand_offset_[p.winner] + j1].push_back({col, 1.0});
      usage[cand_offset_[p.supporter] + j2].push_back({col, inv_k});
      supported[p.supporter].push_back({col, -inv_k});
      pair[static_cast<size_t>(p.supporter) * n + p.winner].push_back({col, 1.0});
    }
    for (size_t b = 0; b < n; ++b) {
      for (size_t j = 0; j < candidates_[b].size(); ++j) {
        const int c = cand_offset_[b] + static_cast<int>(j);
        if (usage[c].empty()) continue;
        lp::SparseRow row = std::move(usage[c]);
        double rhs = 1.0;  // fixed buyers hold their single candidate
        if (!fixed_[b]) {
          row.push_back({x_col[c], -1.0});
          rhs = 0.0;
        }
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.push_back(rhs);
      }
    }
    for (size_t b1 = 0; b1 < n; ++b1) {
      for (size_t b2 = 0; b2 < n; ++b2) {
        if (pair[b1 * n + b2].empty()) continue;
        lp::SparseRow row = pair[b1 * n + b2];
        row.insert(row.end(), supported[b1].begin(), supported[b1].end());
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.push_back(0.0);
      }
    }
    if (!profiles.empty()) {
      lp::SparseRow cap;
      for (size_t i = 0; i < profiles.size(); ++i) cap.push_back({s_index(a, i), 1.0});
      lp.le_rows.push_back(std::move(cap));
      lp.le_rhs.push_back(static_cast<double>(num_items()));
    }
  }
  for (size_t b = 0; b < n; ++b) {
    if (fixed_[b]) continue;
    lp::SparseRow row;
    for (size_t j = 0; j < candidates_[b].size(); ++j) {
      row.push_back({x_col[cand_offset_[b] + j], 1.0});
    }
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }
  return lp;
}

LpPoint LpModel::CompleteFromSx(std::vector<double> values) const {
  values.resize(static_cast<size_t>(num_vars_), 0.0);
  std::fill(values.begin() + y_base_, values.end(), 0.0);
  for (size_t b = 0; b < num_buyers(); ++b) {
    if (fixed_[b]) values[x_index(b, 0)] = 1.0;
  }
  const double inv_k = 1.0 / num_items();
  for (size_t a = 0; a < num_auctions(); ++a) {
    for (size_t i = 0; i < subprofiles_[a].size(); ++i) {
      const double s = values[s_index(a, i)];
      if (s == 0.0) continue;
      const SubProfile& p = subprofiles_[a][i];
      const auto [j1, j2] = reserve_idx_[a][i];
      values[y_index(a, p.winner, j1)] += s;
      values[yp_index(a, p.supporter, j2)] += s * inv_k;
    }
  }
  return LpPoint{std::move(values)};
}

LpSolution LpModel::Expand(const lp::SolveResult& result,
                           const lp::StandardLp& lp, bool reduced) const {
  if (result.status == lp::SolveStatus::kInfeasible ||
      result.status == lp::SolveStatus::kUnbounded) {
    throw SolverError("reserve LP solve returned " + lp::ToString(result.status));
  }
  LpSolution sol;
  sol.status = result.status;
  sol.iterations = result.iterations;
  sol.bland_iterations = result.bland_iterations;
  sol.complementary_slackness = result.complementary_slackness;
  sol.solver_objective = result.objective;
  sol.solved_rows = lp.num_rows();
  sol.solved_cols = lp.num_vars;
  std::vector<double> values(static_cast<size_t>(num_vars_), 0.0);
  if (reduced) {
    std::copy(result.primal.begin(), result.primal.begin() + x_base_, values.begin());
    int col = x_base_;
    for (size_t b = 0; b < num_buyers(); ++b) {
      if (fixed_[b]) continue;
      for (size_t j = 0; j < candidates_[b].size(); ++j) {
        values[x_index(b, j)] = result.primal[col++];
      }
    }
    sol.point = CompleteFromSx(std::move(values));
  } else {
    sol.point = LpPoint{result.primal};
  }
  sol.objective = Objective(sol.point);
  sol.max_violation = MaxViolation(sol.point);
  return sol;
}

LpSolution LpModel::Solve(const lp::SolveLimits& limits) const {
  const lp::StandardLp lp = BuildReduced();
  return Expand(lp::Solve(lp, limits), lp, /*reduced=*/true);
}

LpSolution LpModel::SolveFull(const lp::SolveLimits& limits) const {
  const lp::StandardLp lp = BuildFull();
  return Expand(lp::Solve(lp, limits), lp, /*reduced=*/false);
}

double LpModel::Objective(const LpPoint& point) const {
  double total = 0.0;
  for (size_t a = 0; a < num_auctions(); ++a) {
    const double w = static_cast<double>(dataset_.weight(a));
    for (size_t i = 0; i < subprofiles_[a].size(); ++i) {
      total += w * subprofiles_[a][i].revenue.AsDouble() * point.values[s_index(a, i)];
    }
  }
  return total;
}

double LpModel::MaxViolation(const LpPoint& point) const {
  if (point.values.size() != static_cast<size_t>(num_vars_)) {
    throw ValidationError("LP point has the wrong dimension");
  }
  return lp::MaxViolation(BuildFull(), point.values);
}

LpPoint LpModel::EncodeReserves(const ReserveVector& reserves) const {
  ValidateReserves(dataset_, reserves);
  ReserveVector canonical = reserves;
  std::vector<int> cand(num_buyers());
  for (size_t b = 0; b < num_buyers(); ++b) {
    if (fixed_[b]) canonical.reserves[b] = kZeroMoney;
    const auto& c = candidates_[b];
    const auto it = std::lower_bound(c.begin(), c.end(), canonical[b]);
    if (it == c.end() || *it != canonical[b]) {
      throw ValidationError("reserve " + FormatDecimal(reserves[b], dataset_.scale()) +
                            " of buyer " + dataset_.buyers()[b] +
                            " is not on the reserve grid");
    }
    cand[b] = static_cast<int>(it - c.begin());
  }
  std::vector<double> values(static_cast<size_t>(num_vars_), 0.0);
  for (size_t b = 0; b < num_buyers(); ++b) values[x_index(b, cand[b])] = 1.0;
  for (size_t a = 0; a < num_auctions(); ++a) {
    const AuctionOutcome out = RunEvcg(dataset_, a, canonical);
    for (int w : out.winners) {
      const int i = FindSubprofile(a, w, out.supporter, canonical[w],
                                   canonical[out.supporter]);
      if (i < 0) throw SolverError("happening sub-profile missing from enumeration");
      values[s_index(a, static_cast<size_t>(i))] = 1.0;
    }
  }
  return CompleteFromSx(std::move(values));
}

std::vector<ReserveMass> LpModel::Masses(const LpPoint& point) const {
  std::vector<ReserveMass> out(num_buyers());
  for (size_t b = 0; b < num_buyers(); ++b) {
    out[b].values = candidates_[b];
    for (size_t j = 0; j < candidates_[b].size(); ++j) {
      out[b].probs.push_back(point.values[x_index(b, j)]);
    }
  }
  return out;
}

void LpModel::WriteLpFormat(std::ostream& out) const {
  const lp::StandardLp lp = BuildFull();
  auto write_terms = [&](const std::vector<lp::Term>& terms) {
    int on_line = 0;
    bool first = true;
    for (const lp::Term& t : terms) {
      if (t.coef == 0.0) continue;
      out << (t.coef < 0 ? " - " : (first ? " " : " + "))
          << FormatCoef(std::abs(t.coef)) << " " << VariableName(t.col);
      first = false;
      if (++on_line == 6) {
        out << "\n   ";
        on_line = 0;
      }
    }
    if (first) out << " 0 " << VariableName(0);
  };
  out << "\\ reserve-price LP: " << num_auctions() << " auctions, "
      << num_buyers() << " buyers, k = " << num_items() << "\n";
  out << "Maximize\n obj:";
  std::vector<lp::Term> obj;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.objective[j] != 0.0) obj.push_back({j, lp.objective[j]});
  }
  write_terms(obj);
  out << "\nSubject To\n";
  for (size_t i = 0; i < lp.eq_rows.size(); ++i) {
    out << " e" << i << ":";
    write_terms(lp.eq_rows[i]);
    out << " = " << FormatCoef(lp.eq_rhs[i]) << "\n";
  }
  for (size_t i = 0; i < lp.le_rows.size(); ++i) {
    out << " l" << i << ":";
    write_terms(lp.le_rows[i]);
    out << " <= " << FormatCoef(lp.le_rhs[i]) << "\n";
  }
  out << "End\n";
}

}  // namespace evcg
