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

#include "evcg/instances.h"

#include <algorithm>
#include <string>

#include "evcg/counter_rng.h"
#include "evcg/errors.h"

namespace evcg {
namespace {

std::vector<std::string> BuyerIds(int n) {
  std::vector<std::string> ids;
  for (int b = 0; b < n; ++b) ids.push_back("b" + std::to_string(b + 1));
  return ids;
}

void CheckShape(int buyers, int auctions, int items) {
  if (buyers < 1 || auctions < 1 || items < 1) {
    throw ValidationError("buyers, auctions and items must all be positive");
  }
}

// Stream tags for the generators.
constexpr std::uint64_t kWeightStream = 1;
constexpr std::uint64_t kBidStream = 2;
constexpr std::uint64_t kValueStream = 3;
constexpr std::uint64_t kMultiplierStream = 4;
constexpr std::uint64_t kNoiseStream = 5;

std::int64_t UniformInt(const CounterRng& rng, std::uint64_t stream,
                        std::uint64_t counter, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng.Below(static_cast<std::uint64_t>(hi - lo + 1), stream, counter));
}

}  // namespace

void BadExampleSpec::Validate() const {
  if (k < 2) throw ValidationError("bad example needs k >= 2");
  if (k > 100000) throw ValidationError("bad example k too large");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("bad example delta must lie strictly between 0 and 1");
  }
}

BidDataset BadExample(const BadExampleSpec& spec) {
  spec.Validate();
  const std::int64_t k = spec.k;
  const int n = spec.k + 2;
  std::vector<Auction> auctions(4);
  const std::int64_t weights[] = {1, 1, k, k};
  for (int a = 0; a < 4; ++a) {
    auctions[a].weight = weights[a];
    auctions[a].bids.assign(n, kZeroMoney);
  }
  auctions[0].bids[0] = Money(k * k * k);
  auctions[2].bids[1] = Money(k);
  auctions[3].bids[1] = Money(1);
  for (int b = 2; b < n; ++b) {
    auctions[1].bids[b] = Money(k * k);
    auctions[2].bids[b] = Money(k);
    auctions[3].bids[b] = Money(1);
  }
  return AddAuxiliaryBuyers(BidDataset(spec.k, BuyerIds(n), std::move(auctions)));
}

std::vector<ReserveMass> BadExampleMasses(const BadExampleSpec& spec,
                                          const BidDataset& dataset) {
  spec.Validate();
  const std::int64_t k = spec.k;
  const ReserveGrid grid = ReserveGrid::FromDataset(dataset);
  std::vector<ReserveMass> out(dataset.num_buyers());
  auto set = [&](size_t b, std::int64_t value, double p) {
    out[b].probs[grid.IndexOf(Money(value))] = p;
  };
  for (size_t b = 0; b < dataset.num_buyers(); ++b) {
    if (dataset.is_auxiliary(b)) {
      out[b].values = {kZeroMoney};
      out[b].probs = {1.0};
      continue;
    }
    out[b].values = grid.values();
    out[b].probs.assign(grid.size(), 0.0);
    if (b == 0) {
      set(b, k * k * k, 1.0);
    } else if (b == 1) {
      set(b, k, spec.delta);
      set(b, 1, 1.0 - spec.delta);
    } else {
      set(b, k * k, spec.delta);
      set(b, 1, 1.0 - spec.delta);
    }
  }
  return out;
}

LpPoint BadExamplePoint(const BadExampleSpec& spec, const LpModel& model) {
  spec.Validate();
  const int k = spec.k;
  const double delta = spec.delta;
  const std::int64_t kk = k;
  std::vector<double> values(static_cast<size_t>(model.num_vars()), 0.0);
  const int aux0 = k + 2;  // index of the first auxiliary buyer
  auto aux = [&](int i) { return aux0 + i - 1; };
  auto put = [&](size_t a, int w, int s, std::int64_t r1, std::int64_t r2, double mass) {
    const int i = model.FindSubprofile(a, w, s, Money(r1), Money(r2));
    if (i < 0) throw ValidationError("bad example sub-profile not in the model");
    values[model.s_index(a, static_cast<size_t>(i))] += mass;
  };
  put(0, 0, aux(k), kk * kk * kk, 0, 1.0);
  for (int i = 1; i < k; ++i) put(0, aux(i), aux(k), 0, 0, 1.0);
  for (int j = 2; j < k + 2; ++j) {
    put(1, j, aux(1), kk * kk, 0, delta);
    put(1, j, aux(1), 1, 0, 1.0 - delta);
  }
  put(2, 1, aux(k), kk, 0, delta);
  for (int i = 1; i < k; ++i) put(2, aux(i), aux(k), 0, 0, delta);
  for (int j = 1; j < k + 1; ++j) {
    put(2, j, k + 1, 1, 1, 1.0 - delta);
    put(3, j, k + 1, 1, 1, 1.0 - delta);
  }
  for (int i = 1; i <= k; ++i) put(3, aux(i), aux(k + 1), 0, 0, delta);

  const std::vector<ReserveMass> masses = BadExampleMasses(spec, model.dataset());
  for (size_t b = 0; b < model.num_buyers(); ++b) {
    if (masses[b].values != model.candidates(b)) {
      throw ValidationError("bad example point needs the global reserve grid");
    }
    for (size_t j = 0; j < masses[b].probs.size(); ++j) {
      values[model.x_index(b, j)] = masses[b].probs[j];
    }
  }
  return model.CompleteFromSx(std::move(values));
}

std::int64_t BadExampleHighRevenue(int k) {
  const std::int64_t kk = k;
  return 2 * kk * kk * kk + kk * kk;
}

std::int64_t BadExampleZeroRevenue(int k) {
  const std::int64_t kk = k;
  return kk * kk * kk + kk * kk;
}

std::int64_t BadExampleBestKnownRevenue(int k) {
  const std::int64_t kk = k;
  return 2 * kk * kk * kk + kk * kk + kk;
}

BidDataset UniformInstance(const UniformInstanceSpec& spec, std::uint64_t seed) {
  CheckShape(spec.num_buyers, spec.num_auctions, spec.num_items);
  if (spec.max_bid < 0 || spec.max_weight < 1) {
    throw ValidationError("max bid must be >= 0 and max weight >= 1");
  }
  const CounterRng rng(seed);
  std::vector<Auction> auctions(spec.num_auctions);
  for (int a = 0; a < spec.num_auctions; ++a) {
    auctions[a].weight = UniformInt(rng, kWeightStream, a, 1, spec.max_weight);
    for (int b = 0; b < spec.num_buyers; ++b) {
      auctions[a].bids.push_back(Money(UniformInt(
          rng, CounterRng::Stream(kBidStream, a), b, 0, spec.max_bid)));
    }
  }
  return AddAuxiliaryBuyers(
      BidDataset(spec.num_items, BuyerIds(spec.num_buyers), std::move(auctions)));
}

BidDataset CorrelatedInstance(const CorrelatedInstanceSpec& spec,
                              std::uint64_t seed) {
  CheckShape(spec.num_buyers, spec.num_auctions, spec.num_items);
  if (spec.max_value < 1 || spec.max_multiplier < 1 || spec.noise < 0 ||
      spec.max_weight < 1) {
    throw ValidationError("correlated generator parameters out of range");
  }
  const CounterRng rng(seed);
  std::vector<std::int64_t> multiplier(spec.num_buyers);
  for (int b = 0; b < spec.num_buyers; ++b) {
    multiplier[b] = UniformInt(rng, kMultiplierStream, b, 1, spec.max_multiplier);
  }
  std::vector<Auction> auctions(spec.num_auctions);
  for (int a = 0; a < spec.num_auctions; ++a) {
    auctions[a].weight = UniformInt(rng, kWeightStream, a, 1, spec.max_weight);
    const std::int64_t value = UniformInt(rng, kValueStream, a, 1, spec.max_value);
    for (int b = 0; b < spec.num_buyers; ++b) {
      std::int64_t bid = value * multiplier[b];
      if (spec.noise > 0) {
        bid += UniformInt(rng, CounterRng::Stream(kNoiseStream, a), b, -spec.noise,
                          spec.noise);
      }
      auctions[a].bids.push_back(Money(std::max<std::int64_t>(bid, 0)));
    }
  }
  return AddAuxiliaryBuyers(
      BidDataset(spec.num_items, BuyerIds(spec.num_buyers), std::move(auctions)));
}

}  // namespace evcg
