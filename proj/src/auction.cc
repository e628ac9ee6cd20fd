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

#include "evcg/auction.h"

#include <algorithm>
#include <string>

#include "evcg/errors.h"

namespace evcg {
namespace {

void CheckAugmented(const BidDataset& dataset, std::size_t a) {
  if (!dataset.includes_auxiliaries()) {
    throw ValidationError("auction evaluation requires auxiliary buyers");
  }
  if (a >= dataset.num_auctions()) {
    throw ValidationError("auction index " + std::to_string(a) +
                          " out of range");
  }
}

}  // namespace

AuctionOutcome RunEvcg(const BidDataset& dataset, std::size_t a,
                       const ReserveVector& reserves) {
  CheckAugmented(dataset, a);
  ValidateReserves(dataset, reserves);
  const auto k = static_cast<std::size_t>(dataset.num_items());
  AuctionOutcome out;
  for (int b : dataset.ranking(a)) {
    if (dataset.bid(a, b) >= reserves[b]) out.cleared.push_back(b);
  }
  // k+1 auxiliaries always clear, so there are at least k+1 cleared buyers.
  out.winners.assign(out.cleared.begin(), out.cleared.begin() + k);
  out.supporter = out.cleared[k];
  const Money support_bid = dataset.bid(a, out.supporter);
  for (int w : out.winners) {
    const Money pay = std::max(reserves[w], support_bid);
    out.payments.push_back(pay);
    out.revenue += pay;
  }
  return out;
}

Money AuctionRevenue(const BidDataset& dataset, std::size_t a,
                     const ReserveVector& reserves) {
  const auto k = static_cast<std::size_t>(dataset.num_items());
  int winners[64];
  std::vector<int> spill;
  int* slots = winners;
  if (k > 64) {
    spill.resize(k);
    slots = spill.data();
  }
  std::size_t found = 0;
  for (int b : dataset.ranking(a)) {
    if (dataset.bid(a, b) < reserves[b]) continue;
    if (found == k) {
      const Money support_bid = dataset.bid(a, b);
      Money total;
      for (std::size_t i = 0; i < k; ++i) {
        total += std::max(reserves[slots[i]], support_bid);
      }
      return total;
    }
    slots[found++] = b;
  }
  throw ValidationError("auction evaluation requires auxiliary buyers");
}

Money Revenue(const BidDataset& dataset, const ReserveVector& reserves) {
  if (!dataset.includes_auxiliaries()) {
    throw ValidationError("revenue evaluation requires auxiliary buyers");
  }
  ValidateReserves(dataset, reserves);
  Money total;
  for (std::size_t a = 0; a < dataset.num_auctions(); ++a) {
    total += AuctionRevenue(dataset, a, reserves).Times(dataset.weight(a));
  }
  return total;
}

Money KthPlusOneBid(const BidDataset& dataset, std::size_t a) {
  CheckAugmented(dataset, a);
  return dataset.bid(a, dataset.ranking(a)[dataset.num_items()]);
}

int WinnersAbove(const BidDataset& dataset, std::size_t a,
                 const ReserveVector& reserves, Money tau) {
  if (tau <= kZeroMoney) throw ValidationError("tau must be positive");
  const AuctionOutcome outcome = RunEvcg(dataset, a, reserves);
  return static_cast<int>(std::count_if(
      outcome.payments.begin(), outcome.payments.end(),
      [tau](Money pay) { return pay >= tau; }));
}

}  // namespace evcg
