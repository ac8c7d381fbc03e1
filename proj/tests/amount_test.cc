// Copyright 2026 The pcnsim Authors
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

#include "pcnsim/amount.h"

#include "gtest/gtest.h"
#include "pcnsim/error.h"
#include "pcnsim/rng.h"

namespace pcnsim {
namespace {

TEST(AmountTest, ParsesDecimalsIntoTicks) {
  EXPECT_EQ(Amount::Parse("0.41").ticks(), 4100);
  EXPECT_EQ(Amount::Parse("1000").ticks(), 10000000);
  EXPECT_EQ(Amount::Parse("1000.40").ticks(), 10004000);
  EXPECT_EQ(Amount::Parse("0.0001").ticks(), 1);
  EXPECT_EQ(Amount::Parse(".5").ticks(), 5000);
  EXPECT_EQ(Amount::Parse("-3.25").ticks(), -32500);
  EXPECT_EQ(Amount::Parse(" 7 ").ticks(), 70000);
}

TEST(AmountTest, RejectsMalformedText) {
  for (const char* bad : {"", "-", ".", "1.23456", "1e3", "12a", "1..2",
                          "99999999999999999999"}) {
    EXPECT_THROW(Amount::Parse(bad), Error) << bad;
  }
}

TEST(AmountTest, FormatsWithFourDecimals) {
  EXPECT_EQ(Amount::FromTicks(9989995900).ToString(), "998999.5900");
  EXPECT_EQ(Amount::FromTicks(1).ToString(), "0.0001");
  EXPECT_EQ(Amount::FromTicks(-4100).ToString(), "-0.4100");
  EXPECT_EQ(Amount::Zero().ToString(), "0.0000");
}

TEST(AmountTest, FormatParseRoundTrip) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto ticks = static_cast<int64_t>(rng.NextU64() >> 12) -
                       (int64_t{1} << 51);
    const Amount a = Amount::FromTicks(ticks);
    EXPECT_EQ(Amount::Parse(a.ToString()), a);
  }
}

TEST(AmountTest, ArithmeticIsExact) {
  const Amount fee = Amount::Parse("0.41");
  EXPECT_EQ(fee * 1996, Amount::Parse("818.36"));
  EXPECT_EQ(fee * 100000, Amount::FromUnits(41000));
  EXPECT_LT(Amount::Parse("1000.40"), Amount::Parse("1000") + fee);
}

}  // namespace
}  // namespace pcnsim
