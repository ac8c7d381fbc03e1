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

#ifndef PCNSIM_FEE_POLICY_H_
#define PCNSIM_FEE_POLICY_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "pcnsim/amount.h"

namespace pcnsim {

// Non-negative rational rate numerator / denominator.
struct Rate {
  int64_t numerator = 1;
  int64_t denominator = 200;

  // Accepts decimals ("0.005") and fractions ("1/200").
  static Rate Parse(std::string_view text);
  std::string ToString() const;
  double ToDouble() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const Rate&) const = default;
};

enum class FeeKind {
  kFlat,
  // ceil(rate * amount)
  kProportional,
  // ceil(rate * amount * (forward + reverse) / (2 * forward)): discounted
  // when the payment moves the channel toward balance, surcharged when it
  // drains the already-poorer direction.
  kProportionalImbalance,
};

std::string_view FeeKindName(FeeKind kind);  // "flat" | "proportional" | "imbalance"
FeeKind ParseFeeKind(std::string_view name);

struct FeePolicy {
  FeeKind kind = FeeKind::kProportionalImbalance;
  Rate base_rate;
  Amount flat_fee;
};

// Fee demanded by the owner of a directed edge for forwarding a payment of
// `amount`. The fee basis is the end-to-end payment amount, evaluated on the
// capacities before the payment. Exact rational arithmetic, rounded up to
// whole ticks.
//
// Throws ZeroForwardCapacity for the imbalance policy when cap_forward is 0.
Amount EdgeFee(const FeePolicy& policy, Amount cap_forward, Amount cap_reverse,
               Amount amount);

}  // namespace pcnsim

#endif  // PCNSIM_FEE_POLICY_H_
