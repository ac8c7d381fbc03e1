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

#include "pcnsim/router.h"

#include <functional>
#include <queue>
#include <tuple>

#include "pcnsim/error.h"

namespace pcnsim {

std::vector<NodeId> CostTree::PathFrom(NodeId node) const {
  std::vector<NodeId> path;
  if (!reachable(node)) return path;
  path.push_back(node);
  while (node != receiver_) {
    node = next_hop(node);
    path.push_back(node);
  }
  return path;
}

class CostTreeBuilder {
 public:
  CostTreeBuilder(const NetworkState& state, const FeePolicy& policy,
                  NodeId receiver, Amount amount, CapacityCheck check)
      : state_(state), policy_(policy), check_(check) {
    const size_t n = state.node_count();
    if (receiver < 0 || static_cast<size_t>(receiver) >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "receiver " + std::to_string(receiver) + " out of range");
    }
    if (amount <= Amount::Zero()) {
      throw Error(ErrorCode::kInvalidArgument, "amount must be positive");
    }
    tree_.receiver_ = receiver;
    tree_.amount_ = amount;
    tree_.cost_.assign(n, std::nullopt);
    tree_.hops_.assign(n, -1);
    tree_.next_.assign(n, kNoNode);
    settled_.assign(n, false);
  }

  // Runs the search. With a non-empty `stop_after`, returns as soon as all
  // of those nodes are settled; labels of nodes settled so far are final.
  CostTree Run(const std::vector<NodeId>& stop_after) {
    std::vector<bool> wanted(settled_.size(), false);
    size_t remaining = 0;
    for (NodeId node : stop_after) {
      if (!wanted[Index(node)]) {
        wanted[Index(node)] = true;
        ++remaining;
      }
    }
    const bool early_stop = remaining > 0;

    const NodeId receiver = tree_.receiver_;
    tree_.cost_[Index(receiver)] = Amount::Zero();
    tree_.hops_[Index(receiver)] = 0;
    heap_.push({0, 0, kNoNode, receiver});

    while (!heap_.empty()) {
      const auto [cost_ticks, hops, next, node] = heap_.top();
      heap_.pop();
      if (settled_[Index(node)] || Label(node) != Key{cost_ticks, hops, next}) {
        continue;
      }
      settled_[Index(node)] = true;
      tree_.settle_order_.push_back(node);
      if (early_stop && wanted[Index(node)] && --remaining == 0) break;
      Relax(node);
    }
    return std::move(tree_);
  }

 private:
  using Key = std::tuple<int64_t, int, NodeId>;
  using Entry = std::tuple<int64_t, int, NodeId, NodeId>;

  static size_t Index(NodeId node) { return static_cast<size_t>(node); }

  Key Label(NodeId node) const {
    return {tree_.cost_[Index(node)]->ticks(), tree_.hops_[Index(node)],
            tree_.next_[Index(node)]};
  }

  // Offers every original edge j -> i into the freshly settled node i.
  void Relax(NodeId i) {
    const Amount cost_i = *tree_.cost_[Index(i)];
    const Amount required = tree_.amount_ + cost_i;
    const int hops_j = tree_.hops_[Index(i)] + 1;
    for (const Neighbor& nb : state_.neighbors(i)) {
      const NodeId j = nb.node;
      if (settled_[Index(j)]) continue;
      const Channel& ch = state_.channel(nb.channel);
      const Amount cap_ji = ch.CapacityFrom(j);
      if (cap_ji < required) continue;
      const Amount fee = EdgeFee(policy_, cap_ji, ch.CapacityFrom(i),
                                 tree_.amount_);
      if (check_ == CapacityCheck::kPaperLiteral && cap_ji < required + fee) {
        continue;
      }
      const Amount candidate = cost_i + fee;
      const auto& current = tree_.cost_[Index(j)];
      if (current && Key{candidate.ticks(), hops_j, i} >= Label(j)) continue;
      tree_.cost_[Index(j)] = candidate;
      tree_.hops_[Index(j)] = hops_j;
      tree_.next_[Index(j)] = i;
      heap_.push({candidate.ticks(), hops_j, i, j});
    }
  }

  const NetworkState& state_;
  const FeePolicy& policy_;
  CapacityCheck check_;
  CostTree tree_;
  std::vector<bool> settled_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

CostTree BuildCostTree(const NetworkState& state, const FeePolicy& policy,
                       NodeId receiver, Amount amount, CapacityCheck check) {
  return CostTreeBuilder(state, policy, receiver, amount, check).Run({});
}

std::optional<RouteQuote> QuoteFromTree(const NetworkState& state,
                                        const CostTree& tree, NodeId sender) {
  if (sender < 0 || static_cast<size_t>(sender) >= state.node_count() ||
      sender == tree.receiver()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sender must be a node other than the receiver");
  }
  const Amount amount = tree.amount();
  std::optional<NodeId> best;
  std::tuple<int64_t, int, NodeId> best_key;
  for (const Neighbor& nb : state.neighbors(sender)) {
    const NodeId u = nb.node;
    if (u >= static_cast<NodeId>(tree.node_count()) || !tree.reachable(u)) {
      continue;
    }
    const Amount cost_u = *tree.cost(u);
    if (state.channel(nb.channel).CapacityFrom(sender) < amount + cost_u) {
      continue;
    }
    const std::tuple<int64_t, int, NodeId> key{cost_u.ticks(), tree.hops(u), u};
    if (best && key >= best_key) continue;
    // A cheapest tree path that loops back through the sender is dominated
    // by the sender's own next hop; skip it so the quote stays simple.
    bool through_sender = false;
    for (NodeId v = u; v != tree.receiver(); v = tree.next_hop(v)) {
      if (v == sender) {
        through_sender = true;
        break;
      }
    }
    if (through_sender) continue;
    best = u;
    best_key = key;
  }
  if (!best) return std::nullopt;

  RouteQuote quote;
  quote.amount = amount;
  quote.path.push_back(sender);
  for (NodeId v : tree.PathFrom(*best)) quote.path.push_back(v);
  quote.edge_flows.reserve(quote.path.size() - 1);
  for (size_t t = 0; t + 1 < quote.path.size(); ++t) {
    quote.edge_flows.push_back(amount + *tree.cost(quote.path[t + 1]));
  }
  quote.total_fee = quote.edge_flows.front() - amount;
  return quote;
}

std::optional<RouteQuote> CheapestPath(const NetworkState& state,
                                       const FeePolicy& policy,
                                       const Transaction& tx,
                                       CapacityCheck check) {
  if (tx.sender == tx.receiver) {
    throw Error(ErrorCode::kInvalidArgument, "sender equals receiver");
  }
  std::vector<NodeId> targets;
  for (const Neighbor& nb : state.neighbors(tx.sender)) {
    targets.push_back(nb.node);
  }
  if (targets.empty()) return std::nullopt;
  const CostTree tree =
      CostTreeBuilder(state, policy, tx.receiver, tx.amount, check).Run(targets);
  return QuoteFromTree(state, tree, tx.sender);
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRoutedOffChain:
      return "routed_offchain";
    case Outcome::kOnChainTooExpensive:
      return "onchain_too_expensive";
    case Outcome::kOnChainNoRoute:
      return "onchain_no_route";
    case Outcome::kFailedInsufficientFunds:
      return "failed_insufficient_funds";
  }
  return "unknown";
}

SettlementDecision Decide(std::optional<RouteQuote> quote, Amount chain_fee,
                          FundingCheck funding) {
  SettlementDecision decision;
  if (quote && quote->total_fee <= chain_fee) {
    decision.outcome = Outcome::kRoutedOffChain;
  } else if (!funding.onchain_affordable) {
    decision.outcome = Outcome::kFailedInsufficientFunds;
  } else {
    decision.outcome =
        quote ? Outcome::kOnChainTooExpensive : Outcome::kOnChainNoRoute;
  }
  decision.quote = std::move(quote);
  return decision;
}

}  // namespace pcnsim
