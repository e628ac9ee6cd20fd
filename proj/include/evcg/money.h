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

#ifndef EVCG_MONEY_H_
#define EVCG_MONEY_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace evcg {

// Fixed-point money: an integer count of ticks, where one unit equals
// 10^scale ticks. The scale lives on the dataset; all values of one dataset
// share it, so arithmetic here is plain integer arithmetic.
struct Money {
  std::int64_t ticks = 0;

  constexpr Money() = default;
  constexpr explicit Money(std::int64_t t) : ticks(t) {}

  friend constexpr auto operator<=>(Money, Money) = default;
  friend constexpr bool operator==(Money, Money) = default;

  friend Money operator+(Money a, Money b);
  friend Money operator-(Money a, Money b);
  Money& operator+=(Money other);

  // Multiplication by an integer weight, checked for overflow.
  Money Times(std::int64_t factor) const;

  double AsDouble() const { return static_cast<double>(ticks); }
};

constexpr Money kZeroMoney{};

// Parses a decimal literal such as "12", "12.5" or "0.05" exactly at the given
// scale. Throws ValidationError on negative values, malformed text, or more
// fractional digits than the scale allows.
Money ParseDecimal(std::string_view text, int scale);

// Inverse of ParseDecimal. Always prints exactly `scale` fractional digits
// (none when scale == 0).
std::string FormatDecimal(Money value, int scale);

// Converts ticks to currency units as a double, for reporting only.
double ToUnits(Money value, int scale);

}  // namespace evcg

#endif  // EVCG_MONEY_H_
