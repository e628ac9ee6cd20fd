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

#ifndef EVCG_BOUNDS_H_
#define EVCG_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace evcg {

// Pr[Pois(lambda) > x]. Terms are accumulated in log space, summing the upper
// tail directly when x >= lambda and the lower tail otherwise, so neither side
// loses precision to cancellation. Requires lambda > 0 and x >= 0.
double PoissonTail(std::int64_t x, double lambda);

// The Poisson means used for the tail-probability table:
//   i = 0:  min(2y + x - 2, y)
//   i = 1:  min(2y + x - 1, 2y)
//   i >= 2: i*y + x
double LambdaValue(std::int64_t i, double y, double x);

// min(0.9, min over m < m_max of PoissonTail(m, LambdaValue(m, y, x))), or
// nullopt when y <= 1 or some LambdaValue(i) < i + 1 for i < m_max.
std::optional<double> Table1Lower(double y, double x, std::int64_t m_max = 2000);

// max(0, 1 - (1 + alpha) e^{-2 alpha}).
// Throws ValidationError for negative alpha.
double Table2Lower(double alpha);

// Axes of the three tables.
inline constexpr double kTableY[] = {1.05, 1.1, 1.2, 1.5, 1.7, 1.8};
inline constexpr double kTableX[] = {0.6, 0.8, 0.9, 1.0};
inline constexpr double kTableAlpha[] = {0.15, 0.2, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2};

// max over x in x_grid of min(Table1Lower(y, x) or 0, Table2Lower(y - x)).
// When alpha_grid is non-empty, a y - x that is not on it (within 1e-9)
// contributes 0, i.e. the second table is only read at its listed columns.
// An empty alpha_grid evaluates Table2Lower at any alpha.
double Table3Lower(double y, std::span<const double> x_grid = kTableX,
                   std::span<const double> alpha_grid = kTableAlpha);

// Exact Pr[sum of independent Bernoulli(means[i]) > m] by convolution.
double PoissonBinomialTail(std::span<const double> means, std::int64_t m);

// Exact distribution of a Bernoulli sum; element j is Pr[sum = j].
std::vector<double> PoissonBinomialPmf(std::span<const double> means);

// min over 0 <= i <= m of PoissonTail(m - i, mu - i). Requires m + 1 < mu.
double BernoulliTailLower(std::int64_t m, double mu);

// 1 - (1 + theta) e^{-2 theta}. Requires 0 < theta < 2.
double ExpectedMin2Lower(double theta);

// Exact E[min(X, 2)] for a Bernoulli sum X.
double ExpectedMin2(std::span<const double> means);

// n! / ((m-1)! (n-m)!) * integral over [1-p, 1] of t^{n-m} (1-t)^{m-1} dt,
// by adaptive Gauss-Kronrod quadrature. Requires 1 <= m <= n, p in [0, 1].
double BinomialTailIntegral(std::int64_t n, std::int64_t m, double p);

// Pr[Binomial(n, p) >= m] summed term by term.
double BinomialTailSum(std::int64_t n, std::int64_t m, double p);

// Pr[Pois(alpha * m) >= m + 1]. Requires m >= 1 and alpha > 0; the bound it
// is compared against (0.9 for large m) needs alpha > 1.
double ChernoffTailCheck(std::int64_t m, double alpha);

}  // namespace evcg

#endif  // EVCG_BOUNDS_H_
