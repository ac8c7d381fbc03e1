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

// Ground truth for small instances. Nothing here shares code with the router
// beyond the fee function and the ledger's read accessors.

#ifndef PCNSIM_ORACLE_H_
#define PCNSIM_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pcnsim/amount.h"
#include "pcnsim/fee_policy.h"
#include "pcnsim/ledger.h"

namespace pcnsim {

inline constexpr size_t kMaxExhaustiveNodes = 12;
inline constexpr size_t kMaxCutCheckNodes = 20;

struct OraclePath {
  std::vector<NodeId> path;
  Amount total_fee;
};

// Enumerates every simple directed path sender -> receiver, prices it
// (sender's own fee excluded), checks each edge against the flow it must
// carry, and returns the cheapest feasible one. Ties: fewer hops, then the
// lexicographically smallest node sequence.
//
// Throws InstanceTooLarge above kMaxExhaustiveNodes nodes.
std::optional<OraclePath> ExhaustiveCheapestPath(const NetworkState& state,
                                                 const FeePolicy& policy,
                                                 const Transaction& tx);

struct ViolatedCut {
  // Members of S (always contains the sender, never the receiver),
  // ascending.
  std::vector<NodeId> subset;
  // sum over path edges leaving S of their capacity.
  Amount crossing_capacity;
  // amount + fees of path edges with both ends outside S.
  Amount required;
};

struct CutCheckReport {
  // preservation_ok[v]: out-degree minus in-degree of v on the path is 1 for
  // the sender, -1 for the receiver and 0 otherwise.
  std::vector<bool> preservation_ok;
  std::vector<ViolatedCut> violated_cuts;

  bool feasible() const;
};

// Sets x_ij = 1 on the edges of `path` and checks the flow-preservation
// equalities and the capacity inequality for every node subset that
// contains the sender but not the receiver. Throws InstanceTooLarge above
// kMaxCutCheckNodes nodes.
CutCheckReport CheckLpConstraints(const NetworkState& state,
                                  const FeePolicy& policy,
                                  const std::vector<NodeId>& path,
                                  const Transaction& tx);

}  // namespace pcnsim

#endif  // PCNSIM_ORACLE_H_
