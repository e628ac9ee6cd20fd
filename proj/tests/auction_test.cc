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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "evcg/errors.h"
#include "test_util.h"

namespace evcg {
namespace {

using ::evcg::testing::MakeDataset;
using ::evcg::testing::MakeReserves;
using ::evcg::testing::RandomSmallInstance;

// Sorts cleared buyers directly and pays each of the top k the larger of its
// reserve and the next cleared bid.
Money NaiveRevenue(const BidDataset& d, size_t a, const ReserveVector& r) {
  std::vector<int> cleared;
  for (size_t b = 0; b < d.num_buyers(); ++b) {
    if (d.bid(a, b) >= r[b]) cleared.push_back(static_cast<int>(b));
  }
  std::sort(cleared.begin(), cleared.end(), [&](int x, int y) {
    if (d.bid(a, x) != d.bid(a, y)) return d.bid(a, x) > d.bid(a, y);
    return x < y;
  });
  const int k = d.num_items();
  const Money price = d.bid(a, cleared[k]);
  Money total;
  for (int i = 0; i < k; ++i) total += std::max(price, r[cleared[i]]);
  return total;
}

BidDataset BadExampleK2() {
  return MakeDataset(2, {{8, 0, 0, 0}, {0, 0, 4, 4}, {0, 2, 2, 2}, {0, 1, 1, 1}},
                     {1, 1, 2, 2});
}

TEST(AuxiliaryBuyersTest, AppendsKPlusOneZeroBidders) {
  BidDataset raw(1, {"p", "q"}, {Auction{1, {Money(3), Money(1)}}});
  BidDataset aug = AddAuxiliaryBuyers(raw);
  ASSERT_EQ(aug.num_buyers(), 4u);
  EXPECT_TRUE(aug.includes_auxiliaries());
  EXPECT_EQ(aug.bid(0, 0), Money(3));
  EXPECT_EQ(aug.bid(0, 2), kZeroMoney);
  EXPECT_EQ(aug.bid(0, 3), kZeroMoney);
  EXPECT_EQ(aug.num_real_buyers(), 2u);
  EXPECT_THROW(AddAuxiliaryBuyers(aug), ValidationError);

  BidDataset raw2(2, {"a", "b", "c"}, {Auction{1, {Money(1), Money(2), Money(3)}}});
  EXPECT_EQ(AddAuxiliaryBuyers(raw2).num_buyers(), 6u);
}

TEST(RunEvcgTest, ReserveAboveSupporterSetsPrice) {
  BidDataset d = MakeDataset(1, {{10, 5}});
  AuctionOutcome out = RunEvcg(d, 0, MakeReserves(d, {7, 0}));
  ASSERT_EQ(out.winners, std::vector<int>({0}));
  EXPECT_EQ(out.supporter, 1);
  EXPECT_EQ(out.payments[0], Money(7));
  EXPECT_EQ(out.revenue, Money(7));
}

TEST(RunEvcgTest, ZeroReservesPayKthPlusOneBid) {
  BidDataset d = MakeDataset(2, {{10, 8, 5}});
  AuctionOutcome out = RunEvcg(d, 0, ZeroReserves(d));
  EXPECT_EQ(out.winners, std::vector<int>({0, 1}));
  EXPECT_EQ(out.supporter, 2);
  EXPECT_EQ(out.revenue, Money(10));
}

TEST(RunEvcgTest, EliminatedBuyerDropsOut) {
  BidDataset d = MakeDataset(1, {{10, 5}});
  AuctionOutcome out = RunEvcg(d, 0, MakeReserves(d, {11, 5}));
  EXPECT_EQ(out.winners, std::vector<int>({1}));
  EXPECT_EQ(out.revenue, Money(5));
  EXPECT_EQ(out.cleared.front(), 1);
  // A reserve of 6 also prices out the second buyer (bid 5), so an
  // auxiliary wins and nothing is collected.
  AuctionOutcome none = RunEvcg(d, 0, MakeReserves(d, {11, 6}));
  EXPECT_EQ(none.winners, std::vector<int>({2}));
  EXPECT_EQ(none.revenue, kZeroMoney);
}

TEST(RunEvcgTest, TiesGoToLowerIndex) {
  BidDataset d = MakeDataset(1, {{4, 4, 4}});
  AuctionOutcome out = RunEvcg(d, 0, ZeroReserves(d));
  EXPECT_EQ(out.winners, std::vector<int>({0}));
  EXPECT_EQ(out.supporter, 1);
}

TEST(RunEvcgTest, RequiresAugmentedDataset) {
  BidDataset raw(1, {"p"}, {Auction{1, {Money(3)}}});
  EXPECT_THROW(RunEvcg(raw, 0, ReserveVector{{kZeroMoney}}), ValidationError);
}

TEST(RevenueTest, BadExampleIdentities) {
  BidDataset d = BadExampleK2();
  EXPECT_EQ(Revenue(d, MakeReserves(d, {8, 2, 4, 4})), Money(20));
  EXPECT_EQ(Revenue(d, ZeroReserves(d)), Money(12));
  EXPECT_EQ(Revenue(d, MakeReserves(d, {8, 1, 1, 1})), Money(22));
}

TEST(RevenueTest, ReservesAboveEveryBidGiveZero) {
  BidDataset d = MakeDataset(2, {{3, 9, 1}, {7, 2, 8}});
  EXPECT_EQ(Revenue(d, MakeReserves(d, {10, 10, 10})), kZeroMoney);
}

TEST(KthPlusOneBidTest, OrderStatistic) {
  EXPECT_EQ(KthPlusOneBid(MakeDataset(2, {{10, 8, 5}}), 0), Money(5));
  EXPECT_EQ(KthPlusOneBid(MakeDataset(1, {{10}}), 0), kZeroMoney);
  EXPECT_EQ(KthPlusOneBid(BadExampleK2(), 2), Money(2));
}

TEST(WinnersAboveTest, CountsWinnersPayingAtLeastTau) {
  BidDataset d = MakeDataset(2, {{10, 8, 5}});
  EXPECT_EQ(WinnersAbove(d, 0, ZeroReserves(d), Money(5)), 2);
  EXPECT_EQ(WinnersAbove(d, 0, ZeroReserves(d), Money(6)), 0);
  BidDataset d1 = MakeDataset(1, {{10, 5}});
  EXPECT_EQ(WinnersAbove(d1, 0, MakeReserves(d1, {7, 0}), Money(7)), 1);
  EXPECT_THROW(WinnersAbove(d1, 0, ZeroReserves(d1), kZeroMoney), ValidationError);
}

TEST(RevenueTest, MatchesNaiveImplementationOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    BidDataset d = RandomSmallInstance(seed);
    CounterRng rng(seed + 1000);
    std::vector<std::int64_t> real;
    for (size_t b = 0; b < d.num_real_buyers(); ++b) {
      real.push_back(static_cast<std::int64_t>(rng.Below(11, 0, b)));
    }
    ReserveVector r = MakeReserves(d, real);
    Money total;
    for (size_t a = 0; a < d.num_auctions(); ++a) {
      const Money naive = NaiveRevenue(d, a, r);
      EXPECT_EQ(AuctionRevenue(d, a, r), naive);
      EXPECT_EQ(RunEvcg(d, a, r).revenue, naive);
      total += naive.Times(d.weight(a));
      int prev = d.num_items();
      for (std::int64_t tau = 1; tau <= 10; ++tau) {
        const int w = WinnersAbove(d, a, r, Money(tau));
        EXPECT_LE(w, prev);
        prev = w;
      }
    }
    EXPECT_EQ(Revenue(d, r), total);
    // All-zero reserves pay exactly k times the (k+1)-th bid.
    for (size_t a = 0; a < d.num_auctions(); ++a) {
      EXPECT_EQ(AuctionRevenue(d, a, ZeroReserves(d)),
                KthPlusOneBid(d, a).Times(d.num_items()));
    }
  }
}

TEST(RevenueTest, PricedOutBuyerCanBeRemoved) {
  BidDataset d = MakeDataset(1, {{6, 4, 9}, {2, 7, 3}});
  // Buyer 3 (index 2) with reserve 10 never clears.
  const Money with = Revenue(d, MakeReserves(d, {5, 3, 10}));
  BidDataset smaller = MakeDataset(1, {{6, 4}, {2, 7}});
  EXPECT_EQ(Revenue(smaller, MakeReserves(smaller, {5, 3})), with);
}

}  // namespace
}  // namespace evcg
