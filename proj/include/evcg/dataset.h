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

#ifndef EVCG_DATASET_H_
#define EVCG_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "evcg/money.h"

namespace evcg {

struct Auction {
  std::int64_t weight = 1;  // number of identical copies of this auction
  std::vector<Money> bids;  // one per buyer, in buyer order
};

// A weighted set of auctions over a fixed buyer list, selling `num_items`
// identical units to unit-demand buyers.
//
// Buyers are ranked inside each auction by (bid descending, index ascending);
// the lower index wins every tie. The ranking is computed once here because
// every auction evaluation walks it.
class BidDataset {
 public:
  // Validates shape and values; throws ValidationError.
  BidDataset(int num_items, std::vector<std::string> buyers,
             std::vector<Auction> auctions, int scale = 0,
             bool includes_auxiliaries = false);

  int num_items() const { return num_items_; }
  int scale() const { return scale_; }
  bool includes_auxiliaries() const { return includes_auxiliaries_; }

  std::size_t num_buyers() const { return buyers_.size(); }
  std::size_t num_auctions() const { return auctions_.size(); }
  // Buyers excluding the appended auxiliaries.
  std::size_t num_real_buyers() const;
  bool is_auxiliary(std::size_t buyer) const {
    return includes_auxiliaries_ && buyer >= num_real_buyers();
  }

  const std::vector<std::string>& buyers() const { return buyers_; }
  const std::vector<Auction>& auctions() const { return auctions_; }
  const Auction& auction(std::size_t a) const { return auctions_.at(a); }
  std::int64_t weight(std::size_t a) const { return auctions_[a].weight; }
  Money bid(std::size_t a, std::size_t b) const { return auctions_[a].bids[b]; }

  // Buyer indices of auction `a` in priority order.
  std::span<const int> ranking(std::size_t a) const { return rankings_[a]; }

  // Largest bid of `buyer` over all auctions.
  Money max_bid(std::size_t buyer) const;

 private:
  int num_items_;
  int scale_;
  bool includes_auxiliaries_;
  std::vector<std::string> buyers_;
  std::vector<Auction> auctions_;
  std::vector<std::vector<int>> rankings_;
};

// Appends k+1 buyers bidding 0 everywhere. Throws ValidationError when the
// dataset is already augmented.
BidDataset AddAuxiliaryBuyers(const BidDataset& dataset);

// Candidate reserve values: every bid in the dataset, plus 0.
class ReserveGrid {
 public:
  ReserveGrid() = default;
  // Sorts and deduplicates; always inserts 0.
  explicit ReserveGrid(std::vector<Money> values);

  static ReserveGrid FromDataset(const BidDataset& dataset);
  // Restricted grid: the buyer's own bids plus 0.
  static ReserveGrid ForBuyer(const BidDataset& dataset, std::size_t buyer);

  const std::vector<Money>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Money operator[](std::size_t i) const { return values_[i]; }
  bool Contains(Money v) const;
  // Index of `v`; throws ValidationError if absent.
  std::size_t IndexOf(Money v) const;

 private:
  std::vector<Money> values_{kZeroMoney};
};

// One reserve per buyer, auxiliaries included (their entries must be 0).
struct ReserveVector {
  std::vector<Money> reserves;

  Money operator[](std::size_t b) const { return reserves[b]; }
  std::size_t size() const { return reserves.size(); }
  friend bool operator==(const ReserveVector&, const ReserveVector&) = default;
};

ReserveVector ZeroReserves(const BidDataset& dataset);

// Checks size, non-negativity and zero auxiliary entries.
void ValidateReserves(const BidDataset& dataset, const ReserveVector& reserves);

// Additionally requires every entry to be a grid member.
void ValidateReservesOnGrid(const BidDataset& dataset, const ReserveGrid& grid,
                            const ReserveVector& reserves);

}  // namespace evcg

#endif  // EVCG_DATASET_H_
