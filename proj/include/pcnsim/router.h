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

// Fee-aware cheapest routing with capacity feasibility.
//
// Plain Dijkstra from the sender cannot decide whether an edge is usable,
// since the amount it must carry depends on fees charged further along the
// path. The search therefore runs from the receiver over reversed edges:
// when a node is settled its cost label (fees still to be paid between it
// and the receiver) is final, and so is the exact amount every edge into it
// must carry, namely amount + cost.
//
// Labels are ordered lexicographically by (cost, hop count, next hop id),
// which makes the tree and every quote deterministic.

#ifndef PCNSIM_ROUTER_H_
#define PCNSIM_ROUTER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "pcnsim/amount.h"
#include "pcnsim/fee_policy.h"
#include "pcnsim/ledger.h"

namespace pcnsim {

enum class CapacityCheck {
  // An edge j->i is usable iff cost(i) + amount <= capacity(j->i): it carries
  // the payment plus every fee charged strictly downstream of it.
  kTight,
  // Additionally reserves the edge's own fee:
  // cost(i) + fee(j->i) + amount <= capacity(j->i). One fee more
  // conservative than kTight; kept for comparison runs.
  kPaperLiteral,
};

inline constexpr NodeId kNoNode = -1;

// Receiver-rooted cheapest spanning tree for one (receiver, amount, state).
class CostTree {
 public:
  NodeId receiver() const { return receiver_; }
  Amount amount() const { return amount_; }
  size_t node_count() const { return cost_.size(); }

  bool reachable(NodeId node) const { return cost_[Index(node)].has_value(); }
  // Fees from `node` to the receiver, including node's own fee; nullopt when
  // no feasible path exists.
  std::optional<Amount> cost(NodeId node) const { return cost_[Index(node)]; }
  // Edge count of the tree path to the receiver; -1 when unreachable.
  int hops(NodeId node) const { return hops_[Index(node)]; }
  // Next hop toward the receiver, kNoNode for the receiver and for
  // unreachable nodes.
  NodeId next_hop(NodeId node) const { return next_[Index(node)]; }
  // Nodes in the order the search settled them.
  const std::vector<NodeId>& settle_order() const { return settle_order_; }

  // Follows next hops from `node` to the receiver.
  std::vector<NodeId> PathFrom(NodeId node) const;

 private:
  friend class CostTreeBuilder;
  static size_t Index(NodeId node) { return static_cast<size_t>(node); }

  NodeId receiver_ = kNoNode;
  Amount amount_;
  std::vector<std::optional<Amount>> cost_;
  std::vector<int> hops_;
  std::vector<NodeId> next_;
  std::vector<NodeId> settle_order_;
};

CostTree BuildCostTree(const NetworkState& state, const FeePolicy& policy,
                       NodeId receiver, Amount amount,
                       CapacityCheck check = CapacityCheck::kTight);

// Cheapest route for `sender` given a tree built for the same receiver,
// amount and state. The sender's own fee is not charged: the route minimises
// cost(u) over neighbors u whose first edge can carry amount + cost(u). Ties
// go to fewer hops, then to the lower neighbor id.
std::optional<RouteQuote> QuoteFromTree(const NetworkState& state,
                                        const CostTree& tree, NodeId sender);

// Builds the tree for tx.receiver (stopping as soon as every neighbor of the
// sender is settled) and quotes it. nullopt means no feasible route.
std::optional<RouteQuote> CheapestPath(
    const NetworkState& state, const FeePolicy& policy, const Transaction& tx,
    CapacityCheck check = CapacityCheck::kTight);

enum class Outcome {
  kRoutedOffChain,
  kOnChainTooExpensive,
  kOnChainNoRoute,
  kFailedInsufficientFunds,
};
inline constexpr int kOutcomeCount = 4;

std::string_view OutcomeName(Outcome outcome);

struct SettlementDecision {
  Outcome outcome = Outcome::kOnChainNoRoute;
  // Present whenever a route was found, including too-expensive ones.
  std::optional<RouteQuote> quote;
};

struct FundingCheck {
  // Sender balance covers amount + chain fee.
  bool onchain_affordable = true;
};

// Routes off-chain when total_fee <= chain_fee (ties route off-chain),
// otherwise settles on chain. An on-chain settlement the sender cannot pay
// becomes kFailedInsufficientFunds.
SettlementDecision Decide(std::optional<RouteQuote> quote, Amount chain_fee,
                          FundingCheck funding);

}  // namespace pcnsim

#endif  // PCNSIM_ROUTER_H_
