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

#include "evcg/money.h"

#include <cmath>
#include <limits>
#include <string>

#include "evcg/errors.h"

namespace evcg {
namespace {

std::int64_t Pow10(int scale) {
  if (scale < 0 || scale > 12) {
    throw ValidationError("money scale must be in [0, 12], got " +
                          std::to_string(scale));
  }
  std::int64_t p = 1;
  for (int i = 0; i < scale; ++i) p *= 10;
  return p;
}

}  // namespace

Money operator+(Money a, Money b) {
  std::int64_t out;
  if (__builtin_add_overflow(a.ticks, b.ticks, &out)) {
    throw ValidationError("money overflow in addition");
  }
  return Money(out);
}

Money operator-(Money a, Money b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a.ticks, b.ticks, &out)) {
    throw ValidationError("money overflow in subtraction");
  }
  return Money(out);
}

Money& Money::operator+=(Money other) {
  *this = *this + other;
  return *this;
}

Money Money::Times(std::int64_t factor) const {
  std::int64_t out;
  if (__builtin_mul_overflow(ticks, factor, &out)) {
    throw ValidationError("money overflow in multiplication");
  }
  return Money(out);
}

Money ParseDecimal(std::string_view text, int scale) {
  const std::int64_t unit = Pow10(scale);
  const std::string original(text);
  if (text.empty()) throw ValidationError("empty decimal value");
  if (text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '-') {
    throw ValidationError("bid must be a non-negative decimal: '" + original +
                          "'");
  }
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw ValidationError("malformed decimal: '" + original + "'");
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ValidationError("malformed decimal: '" + original + "'");
    }
    any_digit = true;
    const int d = c - '0';
    if (seen_point) {
      if (frac_digits == scale) {
        if (d != 0) {
          throw ValidationError("decimal '" + original + "' has more than " +
                                std::to_string(scale) +
                                " fractional digits");
        }
        continue;  // trailing zeros beyond the scale are harmless
      }
      frac = frac * 10 + d;
      ++frac_digits;
    } else {
      if (__builtin_mul_overflow(whole, 10, &whole) ||
          __builtin_add_overflow(whole, d, &whole)) {
        throw ValidationError("decimal out of range: '" + original + "'");
      }
    }
  }
  if (!any_digit || text.front() == '.' || text.back() == '.') {
    throw ValidationError("malformed decimal: '" + original + "'");
  }
  for (int i = frac_digits; i < scale; ++i) frac *= 10;
  std::int64_t ticks;
  if (__builtin_mul_overflow(whole, unit, &ticks) ||
      __builtin_add_overflow(ticks, frac, &ticks)) {
    throw ValidationError("decimal out of range: '" + original + "'");
  }
  return Money(ticks);
}

std::string FormatDecimal(Money value, int scale) {
  const std::int64_t unit = Pow10(scale);
  const bool negative = value.ticks < 0;
  // Negative money only shows up in differences; print it symmetrically.
  const std::uint64_t magnitude =
      negative ? static_cast<std::uint64_t>(-(value.ticks + 1)) + 1
               : static_cast<std::uint64_t>(value.ticks);
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / static_cast<std::uint64_t>(unit));
  if (scale > 0) {
    std::string frac =
        std::to_string(magnitude % static_cast<std::uint64_t>(unit));
    out += '.';
    out += std::string(static_cast<size_t>(scale) - frac.size(), '0');
    out += frac;
  }
  return out;
}

double ToUnits(Money value, int scale) {
  return static_cast<double>(value.ticks) / static_cast<double>(Pow10(scale));
}

}  // namespace evcg
