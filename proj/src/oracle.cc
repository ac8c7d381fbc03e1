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

#include "pcnsim/oracle.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "pcnsim/error.h"

namespace pcnsim {
namespace {

// Fee charged by `from` for forwarding over from -> to, priced on the
// capacities in `state`.
Amount FeeOf(const NetworkState& state, const FeePolicy& policy, NodeId from,
             NodeId to, Amount amount) {
  const Amount forward = state.Capacity(from, to);
  if (policy.kind == FeeKind::kProportionalImbalance &&
      forward <= Amount::Zero()) {
    // Unusable direction; any positive flow fails the capacity check anyway.
    return Amount::Zero();
  }
  return EdgeFee(policy, forward, state.Capacity(to, from), amount);
}

class PathEnumerator {
 public:
  PathEnumerator(const NetworkState& state, const FeePolicy& policy,
                 const Transaction& tx)
      : state_(state), policy_(policy), tx_(tx),
        on_path_(state.node_count(), false) {}

  std::optional<OraclePath> Run() {
    path_.push_back(tx_.sender);
    on_path_[static_cast<size_t>(tx_.sender)] = true;
    Extend(tx_.sender);
    return best_;
  }

 private:
  void Extend(NodeId tail) {
    if (tail == tx_.receiver) {
      Evaluate();
      return;
    }
    // Ascending neighbor order so that equal-fee, equal-length candidates
    // are met in lexicographic order.
    std::vector<NodeId> next;
    for (const Neighbor& nb : state_.neighbors(tail)) next.push_back(nb.node);
    std::sort(next.begin(), next.end());
    for (NodeId v : next) {
      if (on_path_[static_cast<size_t>(v)]) continue;
      on_path_[static_cast<size_t>(v)] = true;
      path_.push_back(v);
      Extend(v);
      path_.pop_back();
      on_path_[static_cast<size_t>(v)] = false;
    }
  }

  // Walks the path backward from the receiver: the last edge carries the
  // payment, every earlier edge additionally carries the fee of the node it
  // delivers to.
  void Evaluate() {
    Amount flow = tx_.amount;
    Amount fees;
    for (size_t t = path_.size() - 1; t-- > 0;) {
      const NodeId from = path_[t];
      const NodeId to = path_[t + 1];
      if (state_.Capacity(from, to) < flow) return;
      if (t == 0) break;  // the sender forwards for free
      const Amount fee = FeeOf(state_, policy_, from, to, tx_.amount);
      fees += fee;
      flow += fee;
    }
    const auto key = std::make_tuple(fees, path_.size(), path_);
    if (!best_ ||
        key < std::make_tuple(best_->total_fee, best_->path.size(), best_->path)) {
      best_ = OraclePath{path_, fees};
    }
  }

  const NetworkState& state_;
  const FeePolicy& policy_;
  const Transaction& tx_;
  std::vector<bool> on_path_;
  std::vector<NodeId> path_;
  std::optional<OraclePath> best_;
};

void CheckSize(const NetworkState& state, size_t limit) {
  if (state.node_count() > limit) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(state.node_count()) + " nodes exceeds " +
                    std::to_string(limit));
  }
}

void CheckEndpoints(const NetworkState& state, const Transaction& tx) {
  const auto n = static_cast<NodeId>(state.node_count());
  if (tx.sender < 0 || tx.sender >= n || tx.receiver < 0 || tx.receiver >= n ||
      tx.sender == tx.receiver || tx.amount <= Amount::Zero()) {
    throw Error(ErrorCode::kInvalidArgument, "malformed transaction");
  }
}

}  // namespace

std::optional<OraclePath> ExhaustiveCheapestPath(const NetworkState& state,
                                                 const FeePolicy& policy,
                                                 const Transaction& tx) {
  CheckSize(state, kMaxExhaustiveNodes);
  CheckEndpoints(state, tx);
  return PathEnumerator(state, policy, tx).Run();
}

bool CutCheckReport::feasible() const {
  return violated_cuts.empty() &&
         std::all_of(preservation_ok.begin(), preservation_ok.end(),
                     [](bool ok) { return ok; });
}

CutCheckReport CheckLpConstraints(const NetworkState& state,
                                  const FeePolicy& policy,
                                  const std::vector<NodeId>& path,
                                  const Transaction& tx) {
  CheckSize(state, kMaxCutCheckNodes);
  CheckEndpoints(state, tx);
  const size_t n = state.node_count();

  struct Edge {
    NodeId from;
    NodeId to;
    Amount capacity;
    Amount fee;
  };
  std::vector<Edge> edges;
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    const NodeId from = path[t];
    const NodeId to = path[t + 1];
    edges.push_back({from, to, state.Capacity(from, to),
                     FeeOf(state, policy, from, to, tx.amount)});
  }

  CutCheckReport report;
  std::vector<int> balance(n, 0);
  for (const Edge& e : edges) {
    ++balance[static_cast<size_t>(e.from)];
    --balance[static_cast<size_t>(e.to)];
  }
  report.preservation_ok.resize(n);
  for (size_t v = 0; v < n; ++v) {
    const int expected = static_cast<NodeId>(v) == tx.sender     ? 1
                         : static_cast<NodeId>(v) == tx.receiver ? -1
                                                                 : 0;
    report.preservation_ok[v] = balance[v] == expected;
  }

  // Enumerate S over the remaining n-2 nodes; the sender is always a member
  // and the receiver never is.
  std::vector<NodeId> others;
  for (size_t v = 0; v < n; ++v) {
    const auto node = static_cast<NodeId>(v);
    if (node != tx.sender && node != tx.receiver) others.push_back(node);
  }
  std::vector<bool> in_s(n, false);
  const uint64_t subsets = uint64_t{1} << others.size();
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(in_s.begin(), in_s.end(), false);
    in_s[static_cast<size_t>(tx.sender)] = true;
    for (size_t k = 0; k < others.size(); ++k) {
      if (mask >> k & 1) in_s[static_cast<size_t>(others[k])] = true;
    }
    Amount crossing;
    Amount required = tx.amount;
    for (const Edge& e : edges) {
      const bool from_in = in_s[static_cast<size_t>(e.from)];
      const bool to_in = in_s[static_cast<size_t>(e.to)];
      if (from_in && !to_in) crossing += e.capacity;
      if (!from_in && !to_in) required += e.fee;
    }
    if (crossing < required) {
      ViolatedCut cut;
      for (size_t v = 0; v < n; ++v) {
        if (in_s[v]) cut.subset.push_back(static_cast<NodeId>(v));
      }
      cut.crossing_capacity = crossing;
      cut.required = required;
      report.violated_cuts.push_back(std::move(cut));
    }
  }
  return report;
}

}  // namespace pcnsim
