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

#include "pcnsim/ledger.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "pcnsim/error.h"

namespace pcnsim {
namespace {

std::string NodeName(NodeId node) { return "node " + std::to_string(node); }

[[noreturn]] void ThrowShortfall(NodeId node, Amount have, Amount need) {
  throw Error(ErrorCode::kInsufficientBalance,
              NodeName(node) + " has " + have.ToString() + ", needs " +
                  need.ToString() + " (shortfall " + (need - have).ToString() +
                  ")");
}

void RequireNonNegative(Amount amount, const char* what) {
  if (amount < Amount::Zero()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be non-negative, got " +
                    amount.ToString());
  }
}

}  // namespace

NetworkState::NetworkState(size_t node_count, Amount initial_balance,
                           Amount chain_fee)
    : NetworkState(std::vector<Amount>(node_count, initial_balance),
                   chain_fee) {}

NetworkState::NetworkState(std::vector<Amount> initial_balances,
                           Amount chain_fee)
    : chain_fee_(chain_fee) {
  RequireNonNegative(chain_fee, "chain fee");
  accounts_.reserve(initial_balances.size());
  for (Amount balance : initial_balances) {
    RequireNonNegative(balance, "initial balance");
    accounts_.push_back({balance, Amount::Zero()});
    initial_supply_ += balance;
  }
  adjacency_.resize(accounts_.size());
}

NetworkState NetworkState::Restore(std::vector<NodeAccount> accounts,
                                   const std::vector<Channel>& channels,
                                   Amount burned, Amount chain_fee,
                                   Amount initial_supply) {
  NetworkState state;
  state.accounts_ = std::move(accounts);
  state.adjacency_.resize(state.accounts_.size());
  state.chain_fee_ = chain_fee;
  state.burned_ = burned;
  state.initial_supply_ = initial_supply;
  for (const Channel& channel : channels) {
    state.CheckNode(channel.a);
    state.CheckNode(channel.b);
    if (channel.a == channel.b || channel.cap_ab < Amount::Zero() ||
        channel.cap_ba < Amount::Zero() ||
        channel.cap_ab + channel.cap_ba != channel.total) {
      throw Error(ErrorCode::kInvalidArgument,
                  "inconsistent channel " + std::to_string(channel.a) + "-" +
                      std::to_string(channel.b));
    }
    if (state.FindChannel(channel.a, channel.b)) {
      throw Error(ErrorCode::kDuplicateChannel,
                  std::to_string(channel.a) + "-" + std::to_string(channel.b));
    }
    Channel normalized = channel;
    if (normalized.a > normalized.b) {
      std::swap(normalized.a, normalized.b);
      std::swap(normalized.cap_ab, normalized.cap_ba);
    }
    state.InsertChannel(normalized);
  }
  return state;
}

void NetworkState::CheckNode(NodeId node) const {
  if (node < 0 || static_cast<size_t>(node) >= accounts_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown " + NodeName(node) + " (node count " +
                    std::to_string(accounts_.size()) + ")");
  }
}

const NodeAccount& NetworkState::account(NodeId node) const {
  CheckNode(node);
  return accounts_[static_cast<size_t>(node)];
}

uint64_t NetworkState::PairKey(NodeId x, NodeId y) {
  if (x > y) std::swap(x, y);
  return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
         static_cast<uint32_t>(y);
}

std::optional<ChannelId> NetworkState::FindChannel(NodeId x, NodeId y) const {
  auto it = pair_index_.find(PairKey(x, y));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

const Channel& NetworkState::channel(ChannelId id) const {
  if (id >= channels_.size() || !open_[id]) {
    throw Error(ErrorCode::kNoSuchChannel,
                "channel handle " + std::to_string(id) + " is not open");
  }
  return channels_[id];
}

Channel& NetworkState::MutableChannel(ChannelId id) {
  return const_cast<Channel&>(std::as_const(*this).channel(id));
}

Amount NetworkState::Capacity(NodeId from, NodeId to) const {
  auto id = FindChannel(from, to);
  if (!id) return Amount::Zero();
  return channels_[*id].CapacityFrom(from);
}

std::vector<ChannelId> NetworkState::OpenChannelIds() const {
  std::vector<ChannelId> ids;
  ids.reserve(pair_index_.size());
  for (ChannelId id = 0; id < channels_.size(); ++id) {
    if (open_[id]) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end(), [this](ChannelId x, ChannelId y) {
    const Channel& cx = channels_[x];
    const Channel& cy = channels_[y];
    return std::tie(cx.a, cx.b) < std::tie(cy.a, cy.b);
  });
  return ids;
}

ChannelId NetworkState::InsertChannel(const Channel& channel) {
  const auto id = static_cast<ChannelId>(channels_.size());
  channels_.push_back(channel);
  open_.push_back(true);
  pair_index_.emplace(PairKey(channel.a, channel.b), id);
  adjacency_[static_cast<size_t>(channel.a)].push_back({channel.b, id});
  adjacency_[static_cast<size_t>(channel.b)].push_back({channel.a, id});
  return id;
}

ChannelId NetworkState::OpenChannel(NodeId a, NodeId b, Amount fund_a,
                                    Amount fund_b) {
  CheckNode(a);
  CheckNode(b);
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "channel endpoints must differ (" + NodeName(a) + ")");
  }
  RequireNonNegative(fund_a, "funding");
  RequireNonNegative(fund_b, "funding");
  if (FindChannel(a, b)) {
    throw Error(ErrorCode::kDuplicateChannel,
                NodeName(a) + " and " + NodeName(b) + " already share one");
  }
  const Amount need_a = fund_a + chain_fee_;
  if (balance(a) < need_a) ThrowShortfall(a, balance(a), need_a);
  if (balance(b) < fund_b) ThrowShortfall(b, balance(b), fund_b);

  accounts_[static_cast<size_t>(a)].balance -= need_a;
  accounts_[static_cast<size_t>(b)].balance -= fund_b;
  burned_ += chain_fee_;

  Channel channel{a, b, fund_a, fund_b, fund_a + fund_b};
  if (a > b) {
    std::swap(channel.a, channel.b);
    std::swap(channel.cap_ab, channel.cap_ba);
  }
  return InsertChannel(channel);
}

void NetworkState::CloseChannel(ChannelId id, NodeId initiator) {
  const Channel closing = channel(id);
  if (initiator != closing.a && initiator != closing.b) {
    throw Error(ErrorCode::kInvalidArgument,
                NodeName(initiator) + " is not an endpoint of channel " +
                    std::to_string(id));
  }
  // The closing fee is settled from the on-chain balance before payout.
  if (balance(initiator) < chain_fee_) {
    ThrowShortfall(initiator, balance(initiator), chain_fee_);
  }

  accounts_[static_cast<size_t>(closing.a)].balance += closing.cap_ab;
  accounts_[static_cast<size_t>(closing.b)].balance += closing.cap_ba;
  accounts_[static_cast<size_t>(initiator)].balance -= chain_fee_;
  burned_ += chain_fee_;

  open_[id] = false;
  pair_index_.erase(PairKey(closing.a, closing.b));
  for (NodeId end : {closing.a, closing.b}) {
    auto& list = adjacency_[static_cast<size_t>(end)];
    std::erase_if(list, [id](const Neighbor& n) { return n.channel == id; });
  }
}

void NetworkState::DirectTransfer(const Transaction& tx) {
  CheckNode(tx.sender);
  CheckNode(tx.receiver);
  RequireNonNegative(tx.amount, "transfer amount");
  const Amount need = tx.amount + chain_fee_;
  if (balance(tx.sender) < need) ThrowShortfall(tx.sender, balance(tx.sender), need);
  accounts_[static_cast<size_t>(tx.sender)].balance -= need;
  accounts_[static_cast<size_t>(tx.receiver)].balance += tx.amount;
  burned_ += chain_fee_;
}

void NetworkState::ApplyRoute(const RouteQuote& quote) {
  auto malformed = [](const std::string& why) {
    throw Error(ErrorCode::kMalformedQuote, why);
  };
  const size_t hops = quote.hops();
  if (quote.path.size() < 2 || quote.path.size() != hops + 1) {
    malformed("path and flow counts disagree");
  }
  if (quote.amount <= Amount::Zero()) malformed("non-positive amount");
  if (quote.edge_flows.back() != quote.amount) {
    malformed("last edge flow differs from the payment amount");
  }
  if (quote.edge_flows.front() - quote.amount != quote.total_fee) {
    malformed("total fee does not match first edge flow");
  }
  for (size_t t = 1; t < hops; ++t) {
    if (quote.edge_flows[t - 1] < quote.edge_flows[t]) {
      malformed("edge flows increase along the path");
    }
  }
  std::unordered_set<NodeId> seen;
  for (NodeId node : quote.path) {
    CheckNode(node);
    if (!seen.insert(node).second) malformed("path is not simple");
  }

  // Validate every edge before touching anything.
  std::vector<ChannelId> ids(hops);
  for (size_t t = 0; t < hops; ++t) {
    const NodeId from = quote.path[t];
    const NodeId to = quote.path[t + 1];
    auto id = FindChannel(from, to);
    if (!id) {
      throw Error(ErrorCode::kStaleQuote, "no channel " + std::to_string(from) +
                                              "->" + std::to_string(to));
    }
    const Amount cap = channels_[*id].CapacityFrom(from);
    if (cap < quote.edge_flows[t]) {
      throw Error(ErrorCode::kStaleQuote,
                  "edge " + std::to_string(from) + "->" + std::to_string(to) +
                      " has " + cap.ToString() + ", route needs " +
                      quote.edge_flows[t].ToString());
    }
    ids[t] = *id;
  }

  for (size_t t = 0; t < hops; ++t) {
    Channel& ch = channels_[ids[t]];
    const Amount flow = quote.edge_flows[t];
    if (quote.path[t] == ch.a) {
      ch.cap_ab -= flow;
      ch.cap_ba += flow;
    } else {
      ch.cap_ba -= flow;
      ch.cap_ab += flow;
    }
  }
  for (size_t t = 1; t < hops; ++t) {
    accounts_[static_cast<size_t>(quote.path[t])].earned_fees +=
        quote.forwarder_fee(t);
  }
}

void NetworkState::SetCapacity(NodeId from, NodeId to, Amount capacity) {
  auto id = FindChannel(from, to);
  if (!id) {
    throw Error(ErrorCode::kNoSuchChannel,
                std::to_string(from) + "-" + std::to_string(to));
  }
  Channel& ch = MutableChannel(*id);
  if (capacity < Amount::Zero() || capacity > ch.total) {
    throw Error(ErrorCode::kInvalidArgument,
                "capacity " + capacity.ToString() + " outside [0, " +
                    ch.total.ToString() + "]");
  }
  if (from == ch.a) {
    ch.cap_ab = capacity;
    ch.cap_ba = ch.total - capacity;
  } else {
    ch.cap_ba = capacity;
    ch.cap_ab = ch.total - capacity;
  }
}

Amount NetworkState::Wealth(NodeId node) const {
  Amount wealth = balance(node);
  for (const Neighbor& n : neighbors(node)) {
    wealth += channels_[n.channel].CapacityFrom(node);
  }
  return wealth;
}

Amount NetworkState::TotalChannelFunds() const {
  Amount sum;
  for (ChannelId id = 0; id < channels_.size(); ++id) {
    if (open_[id]) sum += channels_[id].total;
  }
  return sum;
}

Amount NetworkState::TotalHeld() const {
  Amount sum = burned_ + TotalChannelFunds();
  for (const NodeAccount& acct : accounts_) sum += acct.balance;
  return sum;
}

bool operator==(const NetworkState& x, const NetworkState& y) {
  if (x.accounts_ != y.accounts_ || x.chain_fee_ != y.chain_fee_ ||
      x.burned_ != y.burned_ || x.initial_supply_ != y.initial_supply_) {
    return false;
  }
  const auto xs = x.OpenChannelIds();
  const auto ys = y.OpenChannelIds();
  if (xs.size() != ys.size()) return false;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (x.channels_[xs[i]] != y.channels_[ys[i]]) return false;
  }
  return true;
}

}  // namespace pcnsim
