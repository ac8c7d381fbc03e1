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

#include <cstdio>
#include <cstdlib>

#include "pcnsim/error.h"

namespace pcnsim {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDuplicateChannel:
      return "DuplicateChannel";
    case ErrorCode::kNoSuchChannel:
      return "NoSuchChannel";
    case ErrorCode::kInsufficientBalance:
      return "InsufficientBalance";
    case ErrorCode::kStaleQuote:
      return "StaleQuote";
    case ErrorCode::kMalformedQuote:
      return "MalformedQuote";
    case ErrorCode::kZeroForwardCapacity:
      return "ZeroForwardCapacity";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kParse:
      return "Parse";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Amount Amount::Parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&original]() -> Amount {
    throw Error(ErrorCode::kParse, "not a decimal amount: '" + original + "'");
  };
  // Trim surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r' || text.back() == '\n')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return fail();

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail();

  constexpr int64_t kLimit =
      (std::numeric_limits<int64_t>::max() / kTicksPerUnit - 9) / 10;
  int64_t whole = 0;
  size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9') return fail();
    if (whole > kLimit) return fail();
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
  }
  int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;  // '.'
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') return fail();
      if (++frac_digits > kDecimals) return fail();
      frac = frac * 10 + (text[i] - '0');
      any_digit = true;
    }
  }
  if (!any_digit) return fail();
  for (int d = frac_digits; d < kDecimals; ++d) frac *= 10;
  const int64_t ticks = whole * kTicksPerUnit + frac;
  return Amount(negative ? -ticks : ticks);
}

std::string Amount::ToString() const {
  // Avoid negating INT64_MIN by working in unsigned.
  const bool negative = ticks_ < 0;
  const uint64_t magnitude = negative ? 0 - static_cast<uint64_t>(ticks_)
                                      : static_cast<uint64_t>(ticks_);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%llu.%04llu", negative ? "-" : "",
                static_cast<unsigned long long>(magnitude / kTicksPerUnit),
                static_cast<unsigned long long>(magnitude % kTicksPerUnit));
  return buf;
}

std::ostream& operator<<(std::ostream& os, Amount amount) {
  return os << amount.ToString();
}

}  // namespace pcnsim
