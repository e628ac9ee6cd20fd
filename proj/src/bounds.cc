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

#include "evcg/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "evcg/errors.h"

namespace evcg {
namespace {

constexpr double kRelStop = 1e-18;

double LogPoissonPmf(std::int64_t i, double lambda) {
  const double di = static_cast<double>(i);
  return -lambda + di * std::log(lambda) - std::lgamma(di + 1.0);
}

double LogBinomial(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double PoissonTail(std::int64_t x, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("Poisson mean must be positive and finite");
  }
  if (x < 0) throw ValidationError("Poisson tail needs x >= 0");
  const double dx = static_cast<double>(x);
  if (dx >= lambda) {
    // Upper tail: terms i = x+1, x+2, ... decrease geometrically.
    const double head = LogPoissonPmf(x + 1, lambda);
    double sum = 1.0, ratio = 1.0;
    for (std::int64_t i = x + 2;; ++i) {
      ratio *= lambda / static_cast<double>(i);
      sum += ratio;
      if (ratio < kRelStop * sum) break;
    }
    return std::clamp(std::exp(head + std::log(sum)), 0.0, 1.0);
  }
  // Lower tail: terms i = x, x-1, ..., 0 decrease going down.
  const double head = LogPoissonPmf(x, lambda);
  double sum = 1.0, ratio = 1.0;
  for (std::int64_t i = x; i > 0; --i) {
    ratio *= static_cast<double>(i) / lambda;
    sum += ratio;
    if (ratio < kRelStop * sum) break;
  }
  return std::clamp(1.0 - std::exp(head + std::log(sum)), 0.0, 1.0);
}

double LambdaValue(std::int64_t i, double y, double x) {
  if (i < 0) throw ValidationError("lambda index must be non-negative");
  if (i == 0) return std::min(2.0 * y + x - 2.0, y);
  if (i == 1) return std::min(2.0 * y + x - 1.0, 2.0 * y);
  return static_cast<double>(i) * y + x;
}

std::optional<double> Table1Lower(double y, double x, std::int64_t m_max) {
  if (!(y > 1.0)) return std::nullopt;
  for (std::int64_t i = 0; i < m_max; ++i) {
    if (LambdaValue(i, y, x) < static_cast<double>(i) + 1.0) return std::nullopt;
  }
  double best = 0.9;
  for (std::int64_t m = 0; m < m_max; ++m) {
    best = std::min(best, PoissonTail(m, LambdaValue(m, y, x)));
  }
  return best;
}

double Table2Lower(double alpha) {
  if (!(alpha >= 0.0)) throw ValidationError("alpha must be non-negative");
  return std::max(0.0, 1.0 - (1.0 + alpha) * std::exp(-2.0 * alpha));
}

double Table3Lower(double y, std::span<const double> x_grid,
                   std::span<const double> alpha_grid) {
  double best = 0.0;
  for (double x : x_grid) {
    const double alpha = y - x;
    bool listed = alpha_grid.empty();
    for (double a : alpha_grid) {
      if (std::abs(a - alpha) <= 1e-9) listed = true;
    }
    const double second = listed && alpha >= 0.0 ? Table2Lower(alpha) : 0.0;
    const double first = Table1Lower(y, x).value_or(0.0);
    best = std::max(best, std::min(first, second));
  }
  return best;
}

std::vector<double> PoissonBinomialPmf(std::span<const double> means) {
  std::vector<double> pmf(means.size() + 1, 0.0);
  pmf[0] = 1.0;
  for (size_t i = 0; i < means.size(); ++i) {
    const double p = means[i];
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Bernoulli mean outside [0, 1]");
    for (size_t j = i + 1; j > 0; --j) pmf[j] = pmf[j] * (1.0 - p) + pmf[j - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

double PoissonBinomialTail(std::span<const double> means, std::int64_t m) {
  const std::vector<double> pmf = PoissonBinomialPmf(means);
  if (m < 0) return 1.0;
  double tail = 0.0;
  for (size_t j = static_cast<size_t>(m) + 1; j < pmf.size(); ++j) tail += pmf[j];
  return std::clamp(tail, 0.0, 1.0);
}

double BernoulliTailLower(std::int64_t m, double mu) {
  if (m < 0 || !(static_cast<double>(m) + 1.0 < mu)) {
    throw ValidationError("Bernoulli tail bound needs 0 <= m and m + 1 < mu");
  }
  double best = 1.0;
  for (std::int64_t i = 0; i <= m; ++i) {
    best = std::min(best, PoissonTail(m - i, mu - static_cast<double>(i)));
  }
  return best;
}

double ExpectedMin2Lower(double theta) {
  if (!(theta > 0.0 && theta < 2.0)) {
    throw ValidationError("theta must lie strictly between 0 and 2");
  }
  return 1.0 - (1.0 + theta) * std::exp(-2.0 * theta);
}

double ExpectedMin2(std::span<const double> means) {
  const std::vector<double> pmf = PoissonBinomialPmf(means);
  const double p0 = pmf[0];
  const double p1 = pmf.size() > 1 ? pmf[1] : 0.0;
  return 2.0 - 2.0 * p0 - p1;
}

double BinomialTailIntegral(std::int64_t n, std::int64_t m, double p) {
  if (m < 1 || m > n) throw ValidationError("binomial tail integral needs 1 <= m <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability outside [0, 1]");
  const double coef = std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                               std::lgamma(static_cast<double>(m)) -
                               std::lgamma(static_cast<double>(n - m) + 1.0));
  const double a = static_cast<double>(n - m);
  const double b = static_cast<double>(m - 1);
  auto integrand = [a, b](double t) { return std::pow(t, a) * std::pow(1.0 - t, b); };
  if (p == 0.0) return 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 1.0 - p, 1.0, 8, 1e-13);
  return std::clamp(coef * integral, 0.0, 1.0);
}

double BinomialTailSum(std::int64_t n, std::int64_t m, double p) {
  if (n < 0) throw ValidationError("binomial needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability outside [0, 1]");
  if (m <= 0) return 1.0;
  if (m > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  double total = 0.0;
  for (std::int64_t i = m; i <= n; ++i) {
    total += std::exp(LogBinomial(n, i) + static_cast<double>(i) * std::log(p) +
                      static_cast<double>(n - i) * std::log1p(-p));
  }
  return std::clamp(total, 0.0, 1.0);
}

double ChernoffTailCheck(std::int64_t m, double alpha) {
  if (m < 1 || !(alpha > 0.0)) {
    throw ValidationError("Chernoff check needs m >= 1 and alpha > 0");
  }
  return PoissonTail(m, alpha * static_cast<double>(m));
}

}  // namespace evcg
