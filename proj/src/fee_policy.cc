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

#include "pcnsim/fee_policy.h"

#include <charconv>
#include <limits>
#include <numeric>

#include "pcnsim/error.h"

namespace pcnsim {
namespace {

using Wide = __int128;

int64_t CeilDiv(Wide num, Wide den) {
  const Wide q = (num + den - 1) / den;
  if (q > std::numeric_limits<int64_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "fee overflows 64-bit ticks");
  }
  return static_cast<int64_t>(q);
}

int64_t ParseCount(std::string_view text, std::string_view original) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      value < 0) {
    throw Error(ErrorCode::kParse, "bad rate '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

Rate Rate::Parse(std::string_view text) {
  Rate rate;
  if (const size_t slash = text.find('/'); slash != std::string_view::npos) {
    rate.numerator = ParseCount(text.substr(0, slash), text);
    rate.denominator = ParseCount(text.substr(slash + 1), text);
  } else {
    const size_t dot = text.find('.');
    std::string digits(text.substr(0, dot));
    int64_t denominator = 1;
    if (dot != std::string_view::npos) {
      const std::string_view frac = text.substr(dot + 1);
      if (frac.size() > 15) {
        throw Error(ErrorCode::kParse, "rate has too many digits: '" +
                                           std::string(text) + "'");
      }
      digits += frac;
      for (size_t i = 0; i < frac.size(); ++i) denominator *= 10;
    }
    rate.numerator = ParseCount(digits, text);
    rate.denominator = denominator;
  }
  if (rate.denominator == 0) {
    throw Error(ErrorCode::kParse, "rate has zero denominator");
  }
  const int64_t g = std::gcd(rate.numerator, rate.denominator);
  if (g > 1) {
    rate.numerator /= g;
    rate.denominator /= g;
  }
  return rate;
}

std::string Rate::ToString() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::string_view FeeKindName(FeeKind kind) {
  switch (kind) {
    case FeeKind::kFlat:
      return "flat";
    case FeeKind::kProportional:
      return "proportional";
    case FeeKind::kProportionalImbalance:
      return "imbalance";
  }
  return "unknown";
}

FeeKind ParseFeeKind(std::string_view name) {
  if (name == "flat") return FeeKind::kFlat;
  if (name == "proportional") return FeeKind::kProportional;
  if (name == "imbalance") return FeeKind::kProportionalImbalance;
  throw Error(ErrorCode::kParse, "unknown fee policy '" + std::string(name) +
                                     "' (flat|proportional|imbalance)");
}

Amount EdgeFee(const FeePolicy& policy, Amount cap_forward, Amount cap_reverse,
               Amount amount) {
  const Wide alpha = amount.ticks();
  const Wide num = policy.base_rate.numerator;
  const Wide den = policy.base_rate.denominator;
  switch (policy.kind) {
    case FeeKind::kFlat:
      return policy.flat_fee;
    case FeeKind::kProportional:
      return Amount::FromTicks(CeilDiv(alpha * num, den));
    case FeeKind::kProportionalImbalance: {
      if (cap_forward <= Amount::Zero()) {
        throw Error(ErrorCode::kZeroForwardCapacity,
                    "imbalance fee undefined for an empty direction");
      }
      const Wide total = Wide(cap_forward.ticks()) + cap_reverse.ticks();
      return Amount::FromTicks(
          CeilDiv(alpha * num * total, den * 2 * Wide(cap_forward.ticks())));
    }
  }
  return Amount::Zero();
}

}  // namespace pcnsim
