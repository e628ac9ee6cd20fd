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

#ifndef EVCG_AUCTION_H_
#define EVCG_AUCTION_H_

#include <cstddef>
#include <vector>

#include "evcg/dataset.h"
#include "evcg/money.h"

namespace evcg {

// Result of one eager VCG run. Buyer ids are indices into the dataset.
struct AuctionOutcome {
  std::vector<int> cleared;    // buyers with bid >= reserve, in priority order
  std::vector<int> winners;    // the first k cleared buyers
  int supporter = -1;          // the (k+1)-th cleared buyer
  std::vector<Money> payments; // aligned with `winners`
  Money revenue;               // unweighted sum of payments
};

// Eager VCG with personalized reserves on auction `a`:
// eliminate buyers below their reserve, give the k highest cleared bids an
// item, charge each winner max(own reserve, supporter's bid).
// Requires an augmented dataset so a supporter always exists.
AuctionOutcome RunEvcg(const BidDataset& dataset, std::size_t a,
                       const ReserveVector& reserves);

// Unweighted revenue of auction `a`; same result as RunEvcg(...).revenue
// without materializing the outcome.
Money AuctionRevenue(const BidDataset& dataset, std::size_t a,
                     const ReserveVector& reserves);

// Weighted total revenue over all auctions.
Money Revenue(const BidDataset& dataset, const ReserveVector& reserves);

// The (k+1)-th highest raw bid of auction `a`, reserves ignored.
Money KthPlusOneBid(const BidDataset& dataset, std::size_t a);

// Number of winners in auction `a` paying at least `tau` (tau > 0).
int WinnersAbove(const BidDataset& dataset, std::size_t a,
                 const ReserveVector& reserves, Money tau);

}  // namespace evcg

#endif  // EVCG_AUCTION_H_
