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

// Experiment inputs: a Barabasi-Albert channel topology and a stream of
// payments with lognormal amounts between uniformly chosen node pairs.

#ifndef PCNSIM_WORKLOAD_H_
#define PCNSIM_WORKLOAD_H_

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pcnsim/amount.h"
#include "pcnsim/ledger.h"
#include "pcnsim/rng.h"

namespace pcnsim {

struct WorkloadConfig {
  size_t n_nodes = 1000;
  size_t ba_m = 2;
  size_t n_transactions = 100000;
  // Parameters of log(amount), amount in currency units.
  double lognormal_mu = 2.95;
  double lognormal_sigma = 1.2;
  uint64_t seed = 1;

  // Throws InvalidArgument unless n_nodes > ba_m >= 1 and sigma > 0.
  void Validate() const;
};

struct Edge {
  NodeId a;
  NodeId b;
  bool operator==(const Edge&) const = default;
};

// Preferential attachment: nodes 0..m-1 start isolated, node m links to all
// of them, and every later node t links to m distinct earlier nodes drawn
// with probability proportional to degree (uniform draws from the list of
// edge endpoints, redrawn on duplicates). Edges are emitted as (t, target)
// in draw order; there are exactly m * (n - m) of them.
std::vector<Edge> GenerateTopology(const WorkloadConfig& cfg, Rng& rng);

// exp(log_amount) units rounded to the nearest tick, at least one tick.
Amount AmountFromLog(double log_amount);
Amount SampleAmount(const WorkloadConfig& cfg, Rng& rng);

// Sender uniform over all nodes, receiver uniform over the rest.
std::pair<NodeId, NodeId> SamplePair(size_t n_nodes, Rng& rng);

struct Workload {
  size_t n_nodes = 0;
  std::vector<Edge> edges;
  std::vector<Transaction> transactions;
  bool operator==(const Workload&) const;
};

// Topology and transactions come from two generators whose seeds are derived
// from cfg.seed, so the topology does not depend on n_transactions.
Workload GenerateWorkload(const WorkloadConfig& cfg);

bool IsConnected(size_t n_nodes, const std::vector<Edge>& edges);

// CSV replay format. Header "kind,x,y,amount", then one "nodes,<n>,," row,
// "edge,<a>,<b>," rows in channel-opening order, and "tx,<sender>,<receiver>,
// <amount>" rows in settlement order.
void WriteWorkloadCsv(const Workload& workload, std::ostream& os);
Workload ReadWorkloadCsv(std::istream& is);

}  // namespace pcnsim

#endif  // PCNSIM_WORKLOAD_H_
