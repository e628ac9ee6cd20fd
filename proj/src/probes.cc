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

#include "evcg/probes.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "evcg/auction.h"
#include "evcg/counter_rng.h"
#include "evcg/errors.h"
#include "evcg/parallel.h"

namespace evcg {
namespace {

void CheckMasses(const BidDataset& dataset, const std::vector<ReserveMass>& masses) {
  if (masses.size() != dataset.num_buyers()) {
    throw ValidationError("need one reserve mass per buyer, got " +
                          std::to_string(masses.size()));
  }
}

void CheckAuction(const BidDataset& dataset, std::size_t a) {
  if (a >= dataset.num_auctions()) {
    throw ValidationError("auction index " + std::to_string(a) + " out of range");
  }
}

struct MeanSe {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanSe Moments(const std::vector<int>& counts) {
  MeanSe out;
  if (counts.empty()) return out;
  const double n = static_cast<double>(counts.size());
  double sum = 0.0;
  for (int c : counts) sum += c;
  out.mean = sum / n;
  if (counts.size() > 1) {
    double ss = 0.0;
    for (int c : counts) ss += (c - out.mean) * (c - out.mean);
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

double TopMass(const ProbeContext& ctx, std::size_t a, Money tau) {
  const auto& subs = ctx.model.subprofiles(a);
  double total = 0.0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].revenue >= tau) total += ctx.s(a, i);
  }
  return total;
}

std::vector<PhiProbe> ProbeTaus(const ProbeContext& ctx, std::size_t a,
                                const std::vector<Money>& taus, int samples,
                                std::uint64_t seed, int threads) {
  const BidDataset& dataset = ctx.model.dataset();
  CheckAuction(dataset, a);
  if (samples < 1) throw ValidationError("need at least one sample");
  for (Money tau : taus) {
    if (tau <= kZeroMoney) throw ValidationError("tau must be positive");
  }
  const std::size_t nt = taus.size();
  const auto ns = static_cast<std::size_t>(samples);
  // low[j * nt + t], high[j * nt + t]: winners paying >= taus[t] in sample j.
  std::vector<int> low(ns * nt), high(ns * nt);
  const CounterRng rng(seed);
  ParallelFor(ns, threads, [&](std::size_t j) {
    const AuctionOutcome d = RunEvcg(
        dataset, a, SampleReserves(ctx.discounted, rng, SampleFamily::kDiscounted, j));
    const AuctionOutcome u = RunEvcg(
        dataset, a, SampleReserves(ctx.inflated, rng, SampleFamily::kInflated, j));
    for (std::size_t t = 0; t < nt; ++t) {
      low[j * nt + t] = static_cast<int>(std::count_if(
          d.payments.begin(), d.payments.end(), [&](Money p) { return p >= taus[t]; }));
      high[j * nt + t] = static_cast<int>(std::count_if(
          u.payments.begin(), u.payments.end(), [&](Money p) { return p >= taus[t]; }));
    }
  });

  const Money support = KthPlusOneBid(dataset, a);
  const double beta = ctx.boost;
  std::vector<PhiProbe> out(nt);
  std::vector<int> column_low(ns), column_high(ns);
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t j = 0; j < ns; ++j) {
      column_low[j] = low[j * nt + t];
      column_high[j] = high[j * nt + t];
    }
    const MeanSe lo = Moments(column_low);
    const MeanSe hi = Moments(column_high);
    PhiProbe& p = out[t];
    p.tau = taus[t];
    p.above_supporting_bid = taus[t] > support;
    p.lp_mass = TopMass(ctx, a, taus[t]);
    p.discounted_winners = lo.mean;
    p.inflated_winners = hi.mean;
    p.estimate = p.lp_mass - (1.0 - beta) * hi.mean - beta * lo.mean;
    p.std_error = std::hypot((1.0 - beta) * hi.std_error, beta * lo.std_error);
    p.exact = p.lp_mass -
              (1.0 - beta) * ExpectedWinnersAbove(dataset, a, ctx.inflated, taus[t]) -
              beta * ExpectedWinnersAbove(dataset, a, ctx.discounted, taus[t]);
  }
  return out;
}

}  // namespace

double ExpectedWinnersAbove(const BidDataset& dataset, std::size_t a,
                            const std::vector<ReserveMass>& masses, Money tau) {
  CheckAuction(dataset, a);
  CheckMasses(dataset, masses);
  if (tau <= kZeroMoney) throw ValidationError("tau must be positive");
  const int k = dataset.num_items();
  // state[c][w]: probability that c buyers have cleared so far, w of them
  // with reserve >= tau. Row k means the supporter is still being sought.
  std::vector<std::vector<double>> state(k + 1, std::vector<double>(k + 1, 0.0));
  state[0][0] = 1.0;
  double expected = 0.0;
  for (int b : dataset.ranking(a)) {
    const Money bid = dataset.bid(a, b);
    double p_low = 0.0, p_high = 0.0, p_out = 0.0;
    const ReserveMass& m = masses[b];
    for (std::size_t j = 0; j < m.values.size(); ++j) {
      if (m.values[j] > bid) {
        p_out += m.probs[j];
      } else if (m.values[j] >= tau) {
        p_high += m.probs[j];
      } else {
        p_low += m.probs[j];
      }
    }
    const double p_clear = p_low + p_high;
    for (int w = 0; w <= k; ++w) {
      const double p = state[k][w];
      if (p == 0.0) continue;
      // The supporter's bid prices every winner when it reaches tau.
      expected += p * p_clear * (bid >= tau ? k : w);
      state[k][w] = p * p_out;
    }
    for (int c = k - 1; c >= 0; --c) {
      for (int w = c; w >= 0; --w) {
        const double p = state[c][w];
        if (p == 0.0) continue;
        state[c + 1][w + 1] += p * p_high;
        state[c + 1][w] += p * p_low;
        state[c][w] = p * p_out;
      }
    }
  }
  // Without auxiliaries the walk can end early; payments are then reserves.
  for (int c = 0; c <= k; ++c) {
    for (int w = 0; w <= c; ++w) expected += state[c][w] * w;
  }
  return expected;
}

double ExpectedAuctionRevenue(const BidDataset& dataset, std::size_t a,
                              const std::vector<ReserveMass>& masses) {
  CheckAuction(dataset, a);
  CheckMasses(dataset, masses);
  std::vector<Money> levels;
  for (Money bid : dataset.auction(a).bids) {
    if (bid > kZeroMoney) levels.push_back(bid);
  }
  for (const ReserveMass& m : masses) {
    for (std::size_t j = 0; j < m.values.size(); ++j) {
      if (m.values[j] > kZeroMoney && m.probs[j] > 0.0) levels.push_back(m.values[j]);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0.0;
  Money prev = kZeroMoney;
  for (Money v : levels) {
    total += (v - prev).AsDouble() * ExpectedWinnersAbove(dataset, a, masses, v);
    prev = v;
  }
  return total;
}

double ExpectedRevenue(const BidDataset& dataset,
                       const std::vector<ReserveMass>& masses) {
  double total = 0.0;
  for (std::size_t a = 0; a < dataset.num_auctions(); ++a) {
    total += static_cast<double>(dataset.weight(a)) *
             ExpectedAuctionRevenue(dataset, a, masses);
  }
  return total;
}

ProbeContext::ProbeContext(const LpModel& model_in, const LpPoint& point_in,
                           double boost_in)
    : model(model_in), point(point_in), boost(boost_in) {
  if (!(boost > 0.0 && boost < 1.0)) {
    throw ValidationError("boost must lie strictly between 0 and 1");
  }
  if (point.values.size() != static_cast<std::size_t>(model.num_vars())) {
    throw ValidationError("LP point does not match the model");
  }
  masses = NormalizeMasses(model.Masses(point));
  split = SplitMasses(masses, boost);
  discounted = DiscountedMasses(split);
  inflated = InflatedMasses(split);
}

double ProbeContext::s(std::size_t a, std::size_t i) const {
  return point.values[model.s_index(a, i)];
}

std::vector<Money> PaymentThresholds(const LpModel& model, std::size_t a) {
  const BidDataset& dataset = model.dataset();
  CheckAuction(dataset, a);
  const auto& bids = dataset.auction(a).bids;
  const Money top = *std::max_element(bids.begin(), bids.end());
  std::vector<Money> out;
  for (Money bid : bids) out.push_back(bid);
  for (std::size_t b = 0; b < model.num_buyers(); ++b) {
    for (Money v : model.candidates(b)) out.push_back(v);
  }
  std::erase_if(out, [top](Money v) { return v <= kZeroMoney || v > top; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PhiProbe> ProbePhi(const ProbeContext& ctx, std::size_t a,
                               int samples, std::uint64_t seed, int threads) {
  return ProbeTaus(ctx, a, PaymentThresholds(ctx.model, a), samples, seed, threads);
}

PhiProbe ProbePhiAt(const ProbeContext& ctx, std::size_t a, Money tau,
                    int samples, std::uint64_t seed, int threads) {
  return ProbeTaus(ctx, a, {tau}, samples, seed, threads).front();
}

FDeltaProbe ProbeFDelta(const ProbeContext& ctx, std::size_t a, Money tau) {
  const BidDataset& dataset = ctx.model.dataset();
  CheckAuction(dataset, a);
  if (tau <= kZeroMoney) throw ValidationError("tau must be positive");
  // Share of each buyer's mass at its threshold that the inflated side keeps.
  std::vector<double> inflated_share(dataset.num_buyers(), 0.0);
  for (std::size_t b = 0; b < dataset.num_buyers(); ++b) {
    const ReserveMass& m = ctx.masses[b];
    const auto j = static_cast<std::size_t>(
        std::lower_bound(m.values.begin(), m.values.end(), ctx.split[b].threshold) -
        m.values.begin());
    if (m.probs[j] > 0.0) {
      inflated_share[b] = std::clamp(
          (1.0 - ctx.boost) * ctx.split[b].inflated.probs[j] / m.probs[j], 0.0, 1.0);
    }
  }

  FDeltaProbe out;
  out.tau = tau;
  const auto& subs = ctx.model.subprofiles(a);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const SubProfile& p = subs[i];
    if (p.revenue < tau) continue;
    const double s = ctx.s(a, i);
    out.top_mass += s;
    if (dataset.bid(a, p.supporter) >= tau) {
      out.high_support_mass += s;
      continue;
    }
    const Money t = ctx.split[p.winner].threshold;
    double high = 0.0;
    if (p.winner_reserve > t) {
      high = 1.0;
    } else if (p.winner_reserve == t) {
      high = inflated_share[p.winner];
    }
    out.high_reserve_mass += s * high;
    out.low_reserve_mass += s * (1.0 - high);
  }
  const double parts =
      out.high_reserve_mass + out.low_reserve_mass + out.high_support_mass;
  out.partition_ok =
      std::abs(parts - out.top_mass) <= 1e-9 * std::max(1.0, out.top_mass);
  out.delta = out.high_support_mass / dataset.num_items();

  out.inflated_winners = ExpectedWinnersAbove(dataset, a, ctx.inflated, tau);
  for (std::size_t b = 0; b < dataset.num_buyers(); ++b) {
    const ReserveMass& m = ctx.inflated[b];
    for (std::size_t j = 0; j < m.values.size(); ++j) {
      if (m.values[j] >= tau && m.values[j] <= dataset.bid(a, b)) {
        out.inflated_marginal += m.probs[j];
      }
    }
  }
  out.marginal_regime = std::abs(out.inflated_winners - out.inflated_marginal) <= 1e-12;
  out.f_value = out.top_mass - (1.0 - ctx.boost) * out.inflated_winners;
  return out;
}

}  // namespace evcg
