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

#include "evcg/baselines.h"

#include <algorithm>
#include <string>
#include <vector>

#include "evcg/auction.h"
#include "evcg/errors.h"
#include "evcg/parallel.h"

namespace evcg {
namespace {

struct Best {
  ReserveVector reserves;
  Money revenue{-1};
  std::int64_t evaluations = 0;
};

// Odometer over buyers [first, n) in lexicographic order; the earliest
// maximizer wins, so the result is the lexicographically smallest one.
void Search(const BidDataset& dataset,
            const std::vector<std::vector<Money>>& candidates, size_t first,
            ReserveVector r, Best* best) {
  const size_t n = candidates.size();
  std::vector<size_t> pos(n, 0);
  for (size_t b = first; b < n; ++b) r.reserves[b] = candidates[b][0];
  while (true) {
    const Money rev = Revenue(dataset, r);
    ++best->evaluations;
    if (rev > best->revenue) {
      best->revenue = rev;
      best->reserves = r;
    }
    size_t b = n;
    while (b > first) {
      --b;
      if (++pos[b] < candidates[b].size()) {
        r.reserves[b] = candidates[b][pos[b]];
        break;
      }
      pos[b] = 0;
      r.reserves[b] = candidates[b][0];
      if (b == first) return;
    }
    if (b == n || n == first) return;
  }
}

}  // namespace

ReserveSearchResult BruteForceOptimum(const BidDataset& dataset,
                                      const BruteForceOptions& options) {
  if (!dataset.includes_auxiliaries()) {
    throw ValidationError("brute force needs a dataset with auxiliary buyers");
  }
  const size_t n = dataset.num_real_buyers();
  std::vector<std::vector<Money>> candidates;
  std::int64_t product = 1;
  for (size_t b = 0; b < n; ++b) {
    candidates.push_back(ReserveGrid::ForBuyer(dataset, b).values());
    const auto size = static_cast<std::int64_t>(candidates.back().size());
    if (product > options.max_evaluations / size) {
      throw SizeGuardError("brute force would exceed " +
                           std::to_string(options.max_evaluations) +
                           " evaluations; raise --brute-cap to allow it");
    }
    product *= size;
  }
  const ReserveVector zero = ZeroReserves(dataset);
  if (n == 0) return {zero, Revenue(dataset, zero), 1};

  // Split on the first buyer's candidates; merging in candidate order keeps
  // the lexicographic tie-break independent of the thread count.
  std::vector<Best> parts(candidates[0].size());
  ParallelFor(parts.size(), options.threads, [&](size_t i) {
    ReserveVector r = zero;
    r.reserves[0] = candidates[0][i];
    Search(dataset, candidates, 1, r, &parts[i]);
  });
  ReserveSearchResult result;
  result.revenue = Money(-1);
  for (const Best& part : parts) {
    result.evaluations += part.evaluations;
    if (part.revenue > result.revenue) {
      result.revenue = part.revenue;
      result.reserves = part.reserves;
    }
  }
  return result;
}

ReserveSearchResult GreedyReserves(const BidDataset& dataset,
                                   const ReserveGrid& grid) {
  if (!dataset.includes_auxiliaries()) {
    throw ValidationError("greedy search needs a dataset with auxiliary buyers");
  }
  std::vector<int> order(dataset.num_real_buyers());
  for (size_t b = 0; b < order.size(); ++b) order[b] = static_cast<int>(b);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return dataset.max_bid(x) > dataset.max_bid(y);
  });
  ReserveSearchResult result;
  result.reserves = ZeroReserves(dataset);
  result.revenue = Revenue(dataset, result.reserves);
  result.evaluations = 1;
  for (int b : order) {
    ReserveVector trial = result.reserves;
    Money best_rev(-1);
    Money best_value;
    for (Money v : grid.values()) {
      trial.reserves[b] = v;
      const Money rev = Revenue(dataset, trial);
      ++result.evaluations;
      if (rev > best_rev) {
        best_rev = rev;
        best_value = v;
      }
    }
    result.reserves.reserves[b] = best_value;
    result.revenue = best_rev;
  }
  return result;
}

}  // namespace evcg
