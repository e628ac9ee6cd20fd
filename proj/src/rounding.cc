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

#include "evcg/rounding.h"

#include <algorithm>
#include <cmath>

#include "evcg/auction.h"
#include "evcg/errors.h"
#include "evcg/parallel.h"

namespace evcg {
namespace {

constexpr double kThresholdSlack = 1e-12;

}  // namespace

void ValidateParams(const RoundingParams& params) {
  if (!(params.boost > 0.0 && params.boost < 1.0)) {
    throw ValidationError("boost must lie strictly between 0 and 1");
  }
  if (params.num_samples < 1) throw ValidationError("need at least one sample");
}

std::vector<ReserveMass> NormalizeMasses(std::vector<ReserveMass> masses) {
  for (size_t b = 0; b < masses.size(); ++b) {
    ReserveMass& m = masses[b];
    if (m.values.size() != m.probs.size() || m.values.empty()) {
      throw ValidationError("buyer " + std::to_string(b) + " has a malformed mass");
    }
    if (!std::is_sorted(m.values.begin(), m.values.end()) ||
        std::adjacent_find(m.values.begin(), m.values.end()) != m.values.end()) {
      throw ValidationError("buyer " + std::to_string(b) +
                            " mass values must be strictly increasing");
    }
    double total = 0.0;
    for (double& p : m.probs) {
      if (!std::isfinite(p) || p < -1e-9) {
        throw ValidationError("buyer " + std::to_string(b) + " has negative mass");
      }
      p = std::max(p, 0.0);
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-7) {
      throw ValidationError("buyer " + std::to_string(b) + " mass sums to " +
                            std::to_string(total));
    }
    for (double& p : m.probs) p /= total;
  }
  return masses;
}

SplitBuyer SplitMass(const ReserveMass& mass, double boost) {
  const size_t n = mass.values.size();
  // below[j] = total mass strictly below values[j].
  std::vector<double> below(n, 0.0);
  for (size_t j = 1; j < n; ++j) below[j] = below[j - 1] + mass.probs[j - 1];
  size_t t = 0;
  for (size_t j = 0; j < n; ++j) {
    if (below[j] <= boost + kThresholdSlack) t = j;
  }
  SplitBuyer out;
  out.threshold = mass.values[t];
  out.discounted.values = mass.values;
  out.inflated.values = mass.values;
  out.discounted.probs.assign(n, 0.0);
  out.inflated.probs.assign(n, 0.0);
  for (size_t j = 0; j < t; ++j) out.discounted.probs[j] = mass.probs[j] / boost;
  out.discounted.probs[t] = std::max(0.0, (boost - below[t]) / boost);
  double above = 0.0;
  for (size_t j = t + 1; j < n; ++j) {
    out.inflated.probs[j] = mass.probs[j] / (1.0 - boost);
    above += mass.probs[j];
  }
  out.inflated.probs[t] = std::max(0.0, (1.0 - boost - above) / (1.0 - boost));
  return out;
}

std::vector<SplitBuyer> SplitMasses(const std::vector<ReserveMass>& masses,
                                    double boost) {
  std::vector<SplitBuyer> out;
  out.reserve(masses.size());
  for (const ReserveMass& m : masses) out.push_back(SplitMass(m, boost));
  return out;
}

Money DrawFromMass(const ReserveMass& mass, double u) {
  double cum = 0.0;
  size_t last = mass.values.size();
  for (size_t j = 0; j < mass.values.size(); ++j) {
    if (mass.probs[j] <= 0.0) continue;
    cum += mass.probs[j];
    last = j;
    if (u < cum) return mass.values[j];
  }
  if (last == mass.values.size()) throw ValidationError("mass has no support");
  return mass.values[last];
}

ReserveVector SampleReserves(const std::vector<ReserveMass>& masses,
                             const CounterRng& rng, SampleFamily family,
                             std::uint64_t sample) {
  const std::uint64_t stream =
      CounterRng::Stream(static_cast<std::uint64_t>(family), sample);
  ReserveVector r;
  r.reserves.reserve(masses.size());
  for (size_t b = 0; b < masses.size(); ++b) {
    r.reserves.push_back(DrawFromMass(masses[b], rng.Uniform(stream, b)));
  }
  return r;
}

std::vector<ReserveMass> DiscountedMasses(const std::vector<SplitBuyer>& split) {
  std::vector<ReserveMass> out;
  for (const SplitBuyer& s : split) out.push_back(s.discounted);
  return out;
}

std::vector<ReserveMass> InflatedMasses(const std::vector<SplitBuyer>& split) {
  std::vector<ReserveMass> out;
  for (const SplitBuyer& s : split) out.push_back(s.inflated);
  return out;
}

SampleStats Summarize(const std::vector<Money>& revenues) {
  SampleStats stats;
  const double n = static_cast<double>(revenues.size());
  if (revenues.empty()) return stats;
  double sum = 0.0;
  for (Money r : revenues) sum += r.AsDouble();
  stats.mean = sum / n;
  if (revenues.size() > 1) {
    double ss = 0.0;
    for (Money r : revenues) ss += (r.AsDouble() - stats.mean) * (r.AsDouble() - stats.mean);
    stats.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return stats;
}

std::string ToString(Candidate c) {
  switch (c) {
    case Candidate::kDiscounted:
      return "discounted";
    case Candidate::kInflated:
      return "inflated";
    case Candidate::kZero:
      return "zero";
  }
  return "unknown";
}

const ReserveVector& RoundingOutput::chosen_vector() const {
  switch (chosen) {
    case Candidate::kDiscounted:
      return discounted;
    case Candidate::kInflated:
      return inflated;
    case Candidate::kZero:
      break;
  }
  return zero;
}

Money RoundingOutput::chosen_revenue() const {
  switch (chosen) {
    case Candidate::kDiscounted:
      return discounted_revenue;
    case Candidate::kInflated:
      return inflated_revenue;
    case Candidate::kZero:
      break;
  }
  return zero_revenue;
}

RoundingOutput BestOfThree(const BidDataset& dataset,
                           const std::vector<ReserveMass>& masses,
                           const RoundingParams& params) {
  ValidateParams(params);
  if (masses.size() != dataset.num_buyers()) {
    throw ValidationError("need one reserve mass per buyer");
  }
  const std::vector<ReserveMass> normalized = NormalizeMasses(masses);
  const std::vector<SplitBuyer> split = SplitMasses(normalized, params.boost);
  const std::vector<ReserveMass> low = DiscountedMasses(split);
  const std::vector<ReserveMass> high = InflatedMasses(split);
  const CounterRng rng(params.seed);
  const size_t n = static_cast<size_t>(params.num_samples);

  std::vector<Money> low_rev(n), high_rev(n);
  ParallelFor(n, params.threads, [&](size_t i) {
    low_rev[i] = Revenue(dataset, SampleReserves(low, rng, SampleFamily::kDiscounted, i));
    high_rev[i] = Revenue(dataset, SampleReserves(high, rng, SampleFamily::kInflated, i));
  });
  const size_t best_low =
      static_cast<size_t>(std::max_element(low_rev.begin(), low_rev.end()) - low_rev.begin());
  const size_t best_high = static_cast<size_t>(
      std::max_element(high_rev.begin(), high_rev.end()) - high_rev.begin());

  RoundingOutput out;
  out.discounted = SampleReserves(low, rng, SampleFamily::kDiscounted, best_low);
  out.inflated = SampleReserves(high, rng, SampleFamily::kInflated, best_high);
  out.zero = ZeroReserves(dataset);
  out.discounted_revenue = low_rev[best_low];
  out.inflated_revenue = high_rev[best_high];
  out.zero_revenue = Revenue(dataset, out.zero);
  out.discounted_stats = Summarize(low_rev);
  out.inflated_stats = Summarize(high_rev);
  for (const SplitBuyer& s : split) out.thresholds.push_back(s.threshold);
  out.chosen = Candidate::kDiscounted;
  Money best = out.discounted_revenue;
  if (out.inflated_revenue > best) {
    out.chosen = Candidate::kInflated;
    best = out.inflated_revenue;
  }
  if (out.zero_revenue > best) out.chosen = Candidate::kZero;
  return out;
}

ReserveVector SimpleRounding(const std::vector<ReserveMass>& masses,
                             const CounterRng& rng, std::uint64_t sample) {
  return SampleReserves(masses, rng, SampleFamily::kSimple, sample);
}

}  // namespace evcg
