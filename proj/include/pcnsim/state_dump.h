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

// Deterministic text serialization of a NetworkState, used for golden tests
// and for replayable routing fixtures.
//
//   pcnsim-state 1
//   nodes 3
//   chain_fee 0.4100
//   burned 0.8200
//   supply 3000000.0000
//   node 0 998999.5900 0.0000          # id balance earned_fees
//   channel 0 1 1000.0000 1000.0000    # a b cap_ab cap_ba, sorted by (a, b)
//
// A routing fixture appends one line "tx <sender> <receiver> <amount>".
// Lines starting with '#' and blank lines are ignored by the parsers.

#ifndef PCNSIM_STATE_DUMP_H_
#define PCNSIM_STATE_DUMP_H_

#include <string>
#include <string_view>

#include "pcnsim/ledger.h"

namespace pcnsim {

std::string DumpState(const NetworkState& state);
NetworkState ParseStateDump(std::string_view text);

struct RoutingInstance {
  NetworkState state;
  Transaction tx;
};

std::string DumpInstance(const NetworkState& state, const Transaction& tx);
RoutingInstance ParseInstance(std::string_view text);

}  // namespace pcnsim

#endif  // PCNSIM_STATE_DUMP_H_
