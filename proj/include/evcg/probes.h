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

#ifndef EVCG_PROBES_H_
#define EVCG_PROBES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evcg/dataset.h"
#include "evcg/lp_model.h"
#include "evcg/money.h"
#include "evcg/rounding.h"

namespace evcg {

// Expected number of winners of auction `a` paying at least `tau` when every
// buyer draws its reserve independently from `masses`. Exact: walks the
// ranking keeping (cleared so far, winners with reserve >= tau).
double ExpectedWinnersAbove(const BidDataset& dataset, std::size_t a,
                            const std::vector<ReserveMass>& masses, Money tau);

// Expected unweighted revenue of auction `a`, in ticks, by summing
// ExpectedWinnersAbove over the gaps between consecutive payment values.
double ExpectedAuctionRevenue(const BidDataset& dataset, std::size_t a,
                              const std::vector<ReserveMass>& masses);

// Weighted sum of ExpectedAuctionRevenue over all auctions.
double ExpectedRevenue(const BidDataset& dataset,
                       const std::vector<ReserveMass>& masses);

// Everything the probes share: the LP point, its per-buyer masses and their
// split at the given boost.
struct ProbeContext {
  ProbeContext(const LpModel& model, const LpPoint& point, double boost);

  const LpModel& model;
  const LpPoint& point;
  double boost;
  std::vector<ReserveMass> masses;
  std::vector<SplitBuyer> split;
  std::vector<ReserveMass> discounted;
  std::vector<ReserveMass> inflated;

  double s(std::size_t a, std::size_t i) const;
};

// Distinct positive values a payment in auction `a` can take that do not
// exceed its highest bid, ascending.
std::vector<Money> PaymentThresholds(const LpModel& model, std::size_t a);

struct PhiProbe {
  Money tau;
  bool above_supporting_bid = false;  // tau > (k+1)-th highest bid
  double lp_mass = 0.0;               // s mass of sub-profiles with revenue >= tau
  double discounted_winners = 0.0;    // sample means
  double inflated_winners = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double exact = 0.0;                 // same quantity with exact expectations
};

// lp_mass - (1 - boost) E[winners >= tau | inflated] - boost E[... | discounted]
// for every tau in PaymentThresholds(model, a). Expectations are estimated
// from `samples` draws of each family (the same draws for every tau) and also
// computed exactly.
std::vector<PhiProbe> ProbePhi(const ProbeContext& ctx, std::size_t a,
                               int samples, std::uint64_t seed, int threads = 1);

// Single-tau form of ProbePhi.
PhiProbe ProbePhiAt(const ProbeContext& ctx, std::size_t a, Money tau,
                    int samples, std::uint64_t seed, int threads = 1);

struct FDeltaProbe {
  Money tau;
  double f_value = 0.0;  // top mass - (1 - boost) E[winners >= tau | inflated]
  double delta = 0.0;    // supported-from-above mass / k
  double inflated_winners = 0.0;   // exact E[winners >= tau | inflated]
  double inflated_marginal = 0.0;  // sum_b Pr[bid_b >= inflated r_b >= tau]
  // The two inflated terms agree: the order of clearing never matters.
  bool marginal_regime = false;
  double top_mass = 0.0;           // revenue >= tau
  // Sub-profiles of the top set whose supporter bids below tau, split by the
  // winner's reserve against its threshold. At the threshold itself the mass
  // is divided in the proportion the split sends that value to each side.
  double high_reserve_mass = 0.0;
  double low_reserve_mass = 0.0;
  double high_support_mass = 0.0;  // supporter bids >= tau
  bool partition_ok = true;        // the three parts add up to the top set
};

FDeltaProbe ProbeFDelta(const ProbeContext& ctx, std::size_t a, Money tau);

}  // namespace evcg

#endif  // EVCG_PROBES_H_
