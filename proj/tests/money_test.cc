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

#include <gtest/gtest.h>

#include <limits>

#include "evcg/errors.h"

namespace evcg {
namespace {

TEST(MoneyTest, ParsesAndFormatsAtScale) {
  EXPECT_EQ(ParseDecimal("12", 0).ticks, 12);
  EXPECT_EQ(ParseDecimal("12.5", 2).ticks, 1250);
  EXPECT_EQ(ParseDecimal("0.05", 2).ticks, 5);
  EXPECT_EQ(ParseDecimal("3.10", 1).ticks, 31);  // trailing zero is fine
  EXPECT_EQ(FormatDecimal(Money(1250), 2), "12.50");
  EXPECT_EQ(FormatDecimal(Money(5), 2), "0.05");
  EXPECT_EQ(FormatDecimal(Money(7), 0), "7");
}

TEST(MoneyTest, RoundTrip) {
  for (int scale = 0; scale <= 4; ++scale) {
    for (std::int64_t t : {0, 1, 9, 10, 99, 12345, 1000000}) {
      EXPECT_EQ(ParseDecimal(FormatDecimal(Money(t), scale), scale).ticks, t);
    }
  }
}

TEST(MoneyTest, RejectsBadText) {
  EXPECT_THROW(ParseDecimal("-1", 0), ValidationError);
  EXPECT_THROW(ParseDecimal("1.25", 1), ValidationError);
  EXPECT_THROW(ParseDecimal("abc", 0), ValidationError);
  EXPECT_THROW(ParseDecimal("", 0), ValidationError);
  EXPECT_THROW(ParseDecimal("1.", 2), ValidationError);
  EXPECT_THROW(ParseDecimal("1", 13), ValidationError);
}

TEST(MoneyTest, OverflowIsChecked) {
  const Money big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_THROW(big.Times(2), std::exception);
  EXPECT_THROW(big + big, std::exception);
  EXPECT_EQ(Money(3).Times(4).ticks, 12);
}

}  // namespace
}  // namespace evcg
