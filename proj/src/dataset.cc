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

#include "evcg/dataset.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "evcg/errors.h"

namespace evcg {

BidDataset::BidDataset(int num_items, std::vector<std::string> buyers,
                       std::vector<Auction> auctions, int scale,
                       bool includes_auxiliaries)
    : num_items_(num_items),
      scale_(scale),
      includes_auxiliaries_(includes_auxiliaries),
      buyers_(std::move(buyers)),
      auctions_(std::move(auctions)) {
  if (num_items_ < 1) throw ValidationError("num_items must be positive");
  if (scale_ < 0 || scale_ > 12) {
    throw ValidationError("scale must be in [0, 12]");
  }
  std::set<std::string> seen;
  for (const auto& id : buyers_) {
    if (id.empty()) throw ValidationError("buyer id must be non-empty");
    if (!seen.insert(id).second) {
      throw ValidationError("duplicate buyer id '" + id + "'");
    }
  }
  if (includes_auxiliaries_ &&
      buyers_.size() < static_cast<std::size_t>(num_items_) + 1) {
    throw ValidationError("augmented dataset is missing auxiliary buyers");
  }
  for (std::size_t a = 0; a < auctions_.size(); ++a) {
    const Auction& auction = auctions_[a];
    if (auction.weight < 1) {
      throw ValidationError("auction " + std::to_string(a) +
                            ": weight must be >= 1");
    }
    if (auction.bids.size() != buyers_.size()) {
      throw ValidationError("auction " + std::to_string(a) + ": expected " +
                            std::to_string(buyers_.size()) + " bids, got " +
                            std::to_string(auction.bids.size()));
    }
    for (std::size_t b = 0; b < auction.bids.size(); ++b) {
      if (auction.bids[b] < kZeroMoney) {
        throw ValidationError("auction " + std::to_string(a) +
                              ": negative bid for buyer '" + buyers_[b] + "'");
      }
      if (is_auxiliary(b) && auction.bids[b] != kZeroMoney) {
        throw ValidationError("auxiliary buyer '" + buyers_[b] +
                              "' must bid 0");
      }
    }
  }
  rankings_.reserve(auctions_.size());
  for (const Auction& auction : auctions_) {
    std::vector<int> order(buyers_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      return auction.bids[lhs] > auction.bids[rhs];
    });
    rankings_.push_back(std::move(order));
  }
}

std::size_t BidDataset::num_real_buyers() const {
  return includes_auxiliaries_
             ? buyers_.size() - static_cast<std::size_t>(num_items_) - 1
             : buyers_.size();
}

Money BidDataset::max_bid(std::size_t buyer) const {
  Money best = kZeroMoney;
  for (const Auction& auction : auctions_) {
    best = std::max(best, auction.bids[buyer]);
  }
  return best;
}

BidDataset AddAuxiliaryBuyers(const BidDataset& dataset) {
  if (dataset.includes_auxiliaries()) {
    throw ValidationError("dataset already includes auxiliary buyers");
  }
  const int extra = dataset.num_items() + 1;
  std::vector<std::string> buyers = dataset.buyers();
  std::set<std::string> taken(buyers.begin(), buyers.end());
  for (int i = 1; i <= extra; ++i) {
    std::string id = "aux" + std::to_string(i);
    while (taken.count(id)) id = "_" + id;
    taken.insert(id);
    buyers.push_back(std::move(id));
  }
  std::vector<Auction> auctions = dataset.auctions();
  for (Auction& auction : auctions) {
    auction.bids.resize(auction.bids.size() + extra, kZeroMoney);
  }
  return BidDataset(dataset.num_items(), std::move(buyers), std::move(auctions),
                    dataset.scale(), /*includes_auxiliaries=*/true);
}

ReserveGrid::ReserveGrid(std::vector<Money> values) : values_(std::move(values)) {
  values_.push_back(kZeroMoney);
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.front() < kZeroMoney) {
    throw ValidationError("reserve grid values must be non-negative");
  }
}

ReserveGrid ReserveGrid::FromDataset(const BidDataset& dataset) {
  std::vector<Money> values;
  for (const Auction& auction : dataset.auctions()) {
    values.insert(values.end(), auction.bids.begin(), auction.bids.end());
  }
  return ReserveGrid(std::move(values));
}

ReserveGrid ReserveGrid::ForBuyer(const BidDataset& dataset, std::size_t buyer) {
  std::vector<Money> values;
  for (const Auction& auction : dataset.auctions()) {
    values.push_back(auction.bids.at(buyer));
  }
  return ReserveGrid(std::move(values));
}

bool ReserveGrid::Contains(Money v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::size_t ReserveGrid::IndexOf(Money v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) {
    throw ValidationError("reserve " + std::to_string(v.ticks) +
                          " (ticks) is not on the reserve grid");
  }
  return static_cast<std::size_t>(it - values_.begin());
}

ReserveVector ZeroReserves(const BidDataset& dataset) {
  return ReserveVector{std::vector<Money>(dataset.num_buyers(), kZeroMoney)};
}

void ValidateReserves(const BidDataset& dataset, const ReserveVector& reserves) {
  if (reserves.size() != dataset.num_buyers()) {
    throw ValidationError("reserve vector has " +
                          std::to_string(reserves.size()) + " entries, expected " +
                          std::to_string(dataset.num_buyers()));
  }
  for (std::size_t b = 0; b < reserves.size(); ++b) {
    if (reserves[b] < kZeroMoney) {
      throw ValidationError("negative reserve for buyer '" +
                            dataset.buyers()[b] + "'");
    }
    if (dataset.is_auxiliary(b) && reserves[b] != kZeroMoney) {
      throw ValidationError("auxiliary buyer '" + dataset.buyers()[b] +
                            "' must have reserve 0");
    }
  }
}

void ValidateReservesOnGrid(const BidDataset& dataset, const ReserveGrid& grid,
                            const ReserveVector& reserves) {
  ValidateReserves(dataset, reserves);
  for (std::size_t b = 0; b < reserves.size(); ++b) {
    if (!grid.Contains(reserves[b])) {
      throw ValidationError("reserve " +
                            FormatDecimal(reserves[b], dataset.scale()) +
                            " of buyer '" + dataset.buyers()[b] +
                            "' is not on the reserve grid");
    }
  }
}

}  // namespace evcg
