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

// Network state of a payment channel network: on-chain balances, bilateral
// channels with directional capacities, and the settlement operations that
// move money between them.
//
// Money is never created or destroyed except through the on-chain fee, which
// is burned. At every point
//
//   sum(balances) + sum(channel totals) + burned == initial supply
//
// holds exactly in ticks.

#ifndef PCNSIM_LEDGER_H_
#define PCNSIM_LEDGER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pcnsim/amount.h"

namespace pcnsim {

// Dense node index in [0, node_count).
using NodeId = int32_t;

// Stable handle of a channel for the lifetime of the state. Handles of closed
// channels are never reused.
using ChannelId = uint32_t;

struct Transaction {
  NodeId sender = 0;
  NodeId receiver = 0;
  Amount amount;
};

// A priced, capacity-checked route. edge_flows[t] is the amount moved over
// path[t] -> path[t+1]; it carries the payment plus the fees of every
// forwarder strictly downstream of that edge.
struct RouteQuote {
  std::vector<NodeId> path;
  std::vector<Amount> edge_flows;
  Amount total_fee;
  Amount amount;

  size_t hops() const { return edge_flows.size(); }
  // Fee kept by the forwarder at path[t] (0 < t < hops()).
  Amount forwarder_fee(size_t t) const {
    return edge_flows[t - 1] - edge_flows[t];
  }
};

// Bilateral channel. Endpoints are stored with a < b; cap_ab is the amount a
// can still send to b. cap_ab + cap_ba == total while the channel is open.
struct Channel {
  NodeId a = 0;
  NodeId b = 0;
  Amount cap_ab;
  Amount cap_ba;
  Amount total;

  Amount CapacityFrom(NodeId from) const { return from == a ? cap_ab : cap_ba; }
  NodeId Other(NodeId node) const { return node == a ? b : a; }

  bool operator==(const Channel&) const = default;
};

struct NodeAccount {
  Amount balance;
  // Routing fees collected as a forwarder. Statistics only; the fees
  // themselves live in channel capacities.
  Amount earned_fees;

  bool operator==(const NodeAccount&) const = default;
};

struct Neighbor {
  NodeId node;
  ChannelId channel;
};

class NetworkState {
 public:
  NetworkState() = default;
  NetworkState(size_t node_count, Amount initial_balance, Amount chain_fee);
  NetworkState(std::vector<Amount> initial_balances, Amount chain_fee);

  // Rebuilds a state from its serialized parts (see state_dump.h). Channels
  // are reopened in the given order without charging fees.
  static NetworkState Restore(std::vector<NodeAccount> accounts,
                              const std::vector<Channel>& channels,
                              Amount burned, Amount chain_fee,
                              Amount initial_supply);

  size_t node_count() const { return accounts_.size(); }
  const NodeAccount& account(NodeId node) const;
  Amount balance(NodeId node) const { return account(node).balance; }
  Amount chain_fee() const { return chain_fee_; }
  Amount burned() const { return burned_; }
  Amount initial_supply() const { return initial_supply_; }

  size_t channel_count() const { return pair_index_.size(); }
  std::optional<ChannelId> FindChannel(NodeId x, NodeId y) const;
  // Throws NoSuchChannel for closed or unknown handles.
  const Channel& channel(ChannelId id) const;
  // Capacity from -> to, or zero when the nodes share no channel.
  Amount Capacity(NodeId from, NodeId to) const;
  // Open channels ordered by (a, b).
  std::vector<ChannelId> OpenChannelIds() const;

  std::span<const Neighbor> neighbors(NodeId node) const {
    return adjacency_[static_cast<size_t>(node)];
  }
  size_t degree(NodeId node) const { return neighbors(node).size(); }

  // Opens a channel funded by both sides. The initiator `a` pays the
  // on-chain fee. Errors: DuplicateChannel, InsufficientBalance.
  ChannelId OpenChannel(NodeId a, NodeId b, Amount fund_a, Amount fund_b);

  // Pays each side its current capacity; the initiator pays the on-chain
  // fee. Errors: NoSuchChannel, InsufficientBalance, InvalidArgument.
  void CloseChannel(ChannelId id, NodeId initiator);

  // On-chain payment. Errors: InsufficientBalance.
  void DirectTransfer(const Transaction& tx);

  // Executes an off-chain route. Either every edge is updated or, on
  // StaleQuote / MalformedQuote, nothing is.
  void ApplyRoute(const RouteQuote& quote);

  // Moves funds inside a channel so that from -> to has exactly `capacity`.
  // The channel total is unchanged. Scenario construction and tests only.
  void SetCapacity(NodeId from, NodeId to, Amount capacity);

  // Balance plus own-side capacity of every open channel.
  Amount Wealth(NodeId node) const;
  Amount TotalChannelFunds() const;
  // sum(balances) + sum(channel totals) + burned.
  Amount TotalHeld() const;
  bool ConservationHolds() const { return TotalHeld() == initial_supply_; }

  friend bool operator==(const NetworkState& x, const NetworkState& y);

 private:
  void CheckNode(NodeId node) const;
  Channel& MutableChannel(ChannelId id);
  static uint64_t PairKey(NodeId x, NodeId y);
  ChannelId InsertChannel(const Channel& channel);

  std::vector<NodeAccount> accounts_;
  std::vector<Channel> channels_;
  std::vector<bool> open_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<uint64_t, ChannelId> pair_index_;
  Amount chain_fee_;
  Amount burned_;
  Amount initial_supply_;
};

}  // namespace pcnsim

#endif  // PCNSIM_LEDGER_H_
