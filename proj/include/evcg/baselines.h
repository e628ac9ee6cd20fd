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

#ifndef EVCG_BASELINES_H_
#define EVCG_BASELINES_H_

#include <cstdint>

#include "evcg/dataset.h"
#include "evcg/money.h"

namespace evcg {

struct ReserveSearchResult {
  ReserveVector reserves;
  Money revenue;
  std::int64_t evaluations = 0;
};

struct BruteForceOptions {
  std::int64_t max_evaluations = 10000000;
  int threads = 1;
};

// Exact optimum over reserve vectors. Each real buyer ranges over its own
// bids plus 0, which loses nothing: a reserve strictly between two of the
// buyer's bids can be raised to the next bid without changing who clears,
// which only raises payments, and a reserve above every bid is matched or
// beaten by the maximum bid (the buyer then clears only where it bids that
// maximum, and inserting it into the ranking never lowers any payment).
// Among maximizers the lexicographically smallest vector, in buyer order, is
// returned. Throws SizeGuardError when the candidate product exceeds the cap.
ReserveSearchResult BruteForceOptimum(const BidDataset& dataset,
                                      const BruteForceOptions& options = {});

// One pass of coordinate ascent: buyers in decreasing order of their maximum
// bid (lower index first on ties), each set to the grid value maximizing
// total revenue with every other reserve held at its current value (initially
// 0). Ties pick the smallest value.
ReserveSearchResult GreedyReserves(const BidDataset& dataset,
                                   const ReserveGrid& grid);

}  // namespace evcg

#endif  // EVCG_BASELINES_H_
