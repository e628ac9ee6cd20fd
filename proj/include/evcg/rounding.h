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

#ifndef EVCG_ROUNDING_H_
#define EVCG_ROUNDING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "evcg/counter_rng.h"
#include "evcg/dataset.h"
#include "evcg/lp_model.h"
#include "evcg/money.h"

namespace evcg {

struct RoundingParams {
  double boost = 0.55;  // share of LP mass routed to the discounted side
  int num_samples = 64;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Throws ValidationError unless 0 < boost < 1 and num_samples >= 1.
void ValidateParams(const RoundingParams& params);

// Clips tiny negatives to 0 and rescales each buyer's mass to sum to 1.
// Entries below -1e-9 or a total off by more than 1e-7 are rejected.
std::vector<ReserveMass> NormalizeMasses(std::vector<ReserveMass> masses);

struct SplitBuyer {
  Money threshold;       // largest value whose strictly-lower mass <= boost
  ReserveMass discounted;  // supported on values <= threshold
  ReserveMass inflated;    // supported on values >= threshold
};

SplitBuyer SplitMass(const ReserveMass& mass, double boost);
std::vector<SplitBuyer> SplitMasses(const std::vector<ReserveMass>& masses,
                                    double boost);

// Inverse-CDF draw; never returns a value of zero probability.
Money DrawFromMass(const ReserveMass& mass, double u);

// Stream tags keep the sample families independent of each other.
enum class SampleFamily : std::uint64_t {
  kDiscounted = 1,
  kInflated = 2,
  kSimple = 3,
};

// One independent draw per buyer; buyer b uses counter b of the stream
// (family, sample), so draws do not depend on evaluation order.
ReserveVector SampleReserves(const std::vector<ReserveMass>& masses,
                             const CounterRng& rng, SampleFamily family,
                             std::uint64_t sample);

std::vector<ReserveMass> DiscountedMasses(const std::vector<SplitBuyer>& split);
std::vector<ReserveMass> InflatedMasses(const std::vector<SplitBuyer>& split);

struct SampleStats {
  double mean = 0.0;  // in money ticks
  double std_error = 0.0;
};

SampleStats Summarize(const std::vector<Money>& revenues);

enum class Candidate { kDiscounted, kInflated, kZero };
std::string ToString(Candidate c);

struct RoundingOutput {
  ReserveVector discounted;
  ReserveVector inflated;
  ReserveVector zero;
  Money discounted_revenue;
  Money inflated_revenue;
  Money zero_revenue;
  Candidate chosen = Candidate::kZero;
  SampleStats discounted_stats;
  SampleStats inflated_stats;
  std::vector<Money> thresholds;

  const ReserveVector& chosen_vector() const;
  Money chosen_revenue() const;
};

// Draws num_samples discounted and num_samples inflated vectors, keeps the
// best of each (earliest sample on ties), and returns the best of those two
// and the all-zero vector (ties prefer discounted, then inflated).
RoundingOutput BestOfThree(const BidDataset& dataset,
                           const std::vector<ReserveMass>& masses,
                           const RoundingParams& params);

// One draw per buyer straight from the LP mass.
ReserveVector SimpleRounding(const std::vector<ReserveMass>& masses,
                             const CounterRng& rng, std::uint64_t sample = 0);

}  // namespace evcg

#endif  // EVCG_ROUNDING_H_
