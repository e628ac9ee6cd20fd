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

#ifndef EVCG_INSTANCES_H_
#define EVCG_INSTANCES_H_

#include <cstdint>
#include <vector>

#include "evcg/dataset.h"
#include "evcg/lp_model.h"

namespace evcg {

// Worst case for rounding straight from the LP mass: k+2 real buyers and four
// auctions with weights (1, 1, k, k):
//   buyer 1:         (k^3, 0,   0, 0)
//   buyer 2:         (0,   0,   k, 1)
//   buyers 3..k+2:   (0,   k^2, k, 1)
struct BadExampleSpec {
  int k = 2;
  double delta = 0.025;  // fractional weight on the high reserves

  void Validate() const;  // k >= 2, 0 < delta < 1
};

// The augmented dataset.
BidDataset BadExample(const BadExampleSpec& spec);

// The fractional point that puts mass delta on each buyer's high reserve:
// buyer 1 at k^3; buyer 2 at k (delta) or 1; buyers 3..k+2 at k^2 (delta) or
// 1. Masses are aligned with the global grid (auxiliaries on {0}).
std::vector<ReserveMass> BadExampleMasses(const BadExampleSpec& spec,
                                          const BidDataset& dataset);

// The same point in the LP's full variable space, with s spread over
// sub-profiles as follows (aux_i is the i-th auxiliary buyer):
//   auction 1: (buyer 1, aux_k, k^3, 0) and (aux_i, aux_k, 0, 0), i < k: 1
//   auction 2: (buyer j, aux_1, k^2, 0): delta, (buyer j, aux_1, 1, 0): 1-delta,
//              j = 3..k+2
//   auction 3: (buyer 2, aux_k, k, 0) and (aux_i, aux_k, 0, 0), i < k: delta;
//              (buyer j, buyer k+2, 1, 1): 1-delta, j = 2..k+1
//   auction 4: (buyer j, buyer k+2, 1, 1): 1-delta, j = 2..k+1;
//              (aux_i, aux_{k+1}, 0, 0): delta, i <= k
// Objective 2k^3 + k^2 + (1-delta)k. The model must be built from
// BadExample(spec) in the global grid mode.
LpPoint BadExamplePoint(const BadExampleSpec& spec, const LpModel& model);

// Revenue of the three reference vectors, in units.
std::int64_t BadExampleHighRevenue(int k);     // (k^3, k, k^2, ..., k^2)
std::int64_t BadExampleZeroRevenue(int k);     // all zero
std::int64_t BadExampleBestKnownRevenue(int k);  // (k^3, 1, ..., 1)

struct UniformInstanceSpec {
  int num_buyers = 3;
  int num_auctions = 3;
  int num_items = 1;
  std::int64_t max_bid = 9;     // bids uniform on {0..max_bid}
  std::int64_t max_weight = 1;  // weights uniform on {1..max_weight}
};

// Independent uniform integer bids. Augmented.
BidDataset UniformInstance(const UniformInstanceSpec& spec, std::uint64_t seed);

struct CorrelatedInstanceSpec {
  int num_buyers = 3;
  int num_auctions = 3;
  int num_items = 1;
  std::int64_t max_value = 10;       // auction-level value on {1..max_value}
  std::int64_t max_multiplier = 5;   // buyer-level factor on {1..max_multiplier}
  std::int64_t noise = 0;            // per-bid noise on {-noise..noise}
  std::int64_t max_weight = 1;
};

// bid = value(auction) * multiplier(buyer) + noise, clamped at 0. With zero
// noise all bids of one auction are proportional to the buyer multipliers.
// Augmented.
BidDataset CorrelatedInstance(const CorrelatedInstanceSpec& spec,
                              std::uint64_t seed);

}  // namespace evcg

#endif  // EVCG_INSTANCES_H_
