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

#ifndef PCNSIM_AMOUNT_H_
#define PCNSIM_AMOUNT_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace pcnsim {

// A money amount in integer ticks. One currency unit is 10^4 ticks, so
// "0.41" is 4100 ticks. Ledger state never touches floating point.
//
// The type itself is signed so that differences (shortfalls, deltas) can be
// expressed; the ledger enforces non-negativity of balances and capacities.
class Amount {
 public:
  static constexpr int64_t kTicksPerUnit = 10000;
  static constexpr int kDecimals = 4;

  constexpr Amount() = default;

  static constexpr Amount FromTicks(int64_t ticks) { return Amount(ticks); }
  static constexpr Amount FromUnits(int64_t units) {
    return Amount(units * kTicksPerUnit);
  }
  static constexpr Amount Zero() { return Amount(0); }
  static constexpr Amount Max() {
    return Amount(std::numeric_limits<int64_t>::max());
  }

  // Parses a decimal such as "1000", "0.41", "-3.5" or "12.3456". More than
  // four fractional digits is an error; there is no implicit rounding.
  static Amount Parse(std::string_view text);

  constexpr int64_t ticks() const { return ticks_; }

  // Lossy; for statistics and reports only.
  double ToDouble() const {
    return static_cast<double>(ticks_) / static_cast<double>(kTicksPerUnit);
  }

  // Fixed four-decimal rendering, e.g. "998999.5900".
  std::string ToString() const;

  constexpr Amount& operator+=(Amount other) {
    ticks_ += other.ticks_;
    return *this;
  }
  constexpr Amount& operator-=(Amount other) {
    ticks_ -= other.ticks_;
    return *this;
  }
  friend constexpr Amount operator+(Amount a, Amount b) {
    return Amount(a.ticks_ + b.ticks_);
  }
  friend constexpr Amount operator-(Amount a, Amount b) {
    return Amount(a.ticks_ - b.ticks_);
  }
  friend constexpr Amount operator*(Amount a, int64_t k) {
    return Amount(a.ticks_ * k);
  }
  friend constexpr auto operator<=>(Amount, Amount) = default;

 private:
  constexpr explicit Amount(int64_t ticks) : ticks_(ticks) {}

  int64_t ticks_ = 0;
};

std::ostream& operator<<(std::ostream& os, Amount amount);

}  // namespace pcnsim

#endif  // PCNSIM_AMOUNT_H_
