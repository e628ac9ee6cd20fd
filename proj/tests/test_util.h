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

#ifndef EVCG_TESTS_TEST_UTIL_H_
#define EVCG_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "evcg/counter_rng.h"
#include "evcg/dataset.h"

namespace evcg::testing {

// Integer bids at scale 0; `bids[a][b]`. Returns the augmented dataset.
inline BidDataset MakeDataset(int k,
                              const std::vector<std::vector<std::int64_t>>& bids,
                              std::vector<std::int64_t> weights = {}) {
  const size_t n = bids.empty() ? 0 : bids[0].size();
  std::vector<std::string> ids;
  for (size_t b = 0; b < n; ++b) ids.push_back("b" + std::to_string(b + 1));
  std::vector<Auction> auctions;
  for (size_t a = 0; a < bids.size(); ++a) {
    Auction auction;
    auction.weight = weights.empty() ? 1 : weights[a];
    for (std::int64_t v : bids[a]) auction.bids.push_back(Money(v));
    auctions.push_back(std::move(auction));
  }
  return AddAuxiliaryBuyers(BidDataset(k, ids, auctions));
}

// Reserves for the real buyers; auxiliaries are padded with 0.
inline ReserveVector MakeReserves(const BidDataset& dataset,
                                  const std::vector<std::int64_t>& real) {
  ReserveVector r = ZeroReserves(dataset);
  for (size_t b = 0; b < real.size(); ++b) r.reserves[b] = Money(real[b]);
  return r;
}

// Small random instance in the acceptance regime: up to 4 real buyers, up to
// 3 auctions, k in {1, 2}, bids in 0..9, weights in 1..3.
inline BidDataset RandomSmallInstance(std::uint64_t seed) {
  CounterRng rng(seed);
  std::uint64_t c = 0;
  const int k = 1 + static_cast<int>(rng.Below(2, 0, c++));
  const int n = 1 + static_cast<int>(rng.Below(4, 0, c++));
  const int m = 1 + static_cast<int>(rng.Below(3, 0, c++));
  std::vector<std::vector<std::int64_t>> bids(m);
  std::vector<std::int64_t> weights(m);
  for (int a = 0; a < m; ++a) {
    weights[a] = 1 + static_cast<std::int64_t>(rng.Below(3, 0, c++));
    for (int b = 0; b < n; ++b) {
      bids[a].push_back(static_cast<std::int64_t>(rng.Below(10, 0, c++)));
    }
  }
  return MakeDataset(k, bids, weights);
}

}  // namespace evcg::testing

#endif  // EVCG_TESTS_TEST_UTIL_H_
