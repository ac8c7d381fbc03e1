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

// End-to-end experiment: fund every node, open the generated channels, then
// settle the payment stream one transaction at a time (route, decide,
// apply) while collecting statistics.

#ifndef PCNSIM_SIMULATION_H_
#define PCNSIM_SIMULATION_H_

#include <array>
#include <string>
#include <vector>

#include "pcnsim/amount.h"
#include "pcnsim/fee_policy.h"
#include "pcnsim/ledger.h"
#include "pcnsim/router.h"
#include "pcnsim/workload.h"

namespace pcnsim {

struct SimConfig {
  WorkloadConfig workload;
  Amount initial_balance = Amount::FromUnits(1000000);
  Amount channel_funding_each_side = Amount::FromUnits(1000);
  Amount chain_fee = Amount::FromTicks(4100);  // 0.41
  FeePolicy fee_policy;                         // imbalance-adjusted 0.5%
  CapacityCheck capacity_check = CapacityCheck::kTight;
  std::string out_dir = "out";
  // Conservation is audited every this many transactions and at the end.
  size_t audit_interval = 1000;

  // Checks the settlement parameters. The workload section is checked
  // separately because replayed workloads do not come from it.
  void Validate() const;
};

using OutcomeCounts = std::array<size_t, kOutcomeCount>;

struct TxRecord {
  size_t id = 0;
  Transaction tx;
  Outcome outcome = Outcome::kOnChainNoRoute;
  // Hop count and total fee of the cheapest route; zero when none exists.
  size_t hops = 0;
  Amount total_fee;
};

// Log-spaced amount bins with edges 10^(k/8) units for k = -16..32. The
// first bin also holds everything below 0.01, the last everything above
// 10^4, so the bins partition all positive amounts.
struct AmountBin {
  Amount lower;  // inclusive
  Amount upper;  // exclusive; Amount::Max() for the last bin
  OutcomeCounts counts{};
};

std::vector<AmountBin> MakeAmountBins();
size_t AmountBinIndex(const std::vector<AmountBin>& bins, Amount amount);

struct NodeRecord {
  NodeId node = 0;
  size_t degree = 0;
  Amount earned_fees;
  Amount balance;
  Amount wealth;
};

struct ConservationAudit {
  size_t after_transactions = 0;
  Amount held;
  bool ok = false;
};

struct SimTotals {
  OutcomeCounts outcome_counts{};
  // Transactions for which any feasible route existed.
  size_t has_route = 0;
  Amount routing_fees;
  Amount chain_fees_bootstrap;
  Amount chain_fees_transactions;
  Amount transaction_phase_spend;  // routing_fees + chain_fees_transactions
  Amount naive_onchain_cost;       // n_transactions * chain_fee
  Amount transferred_volume;       // sum of amounts of non-failed payments
  double mean_hops_offchain = 0.0;
  double degree_earnings_spearman = 0.0;
  bool conservation_ok = true;
};

struct SimReport {
  SimConfig config;
  std::vector<TxRecord> transactions;
  std::vector<AmountBin> amount_histogram;
  // pathlen_histogram[h][outcome]; h = 0 collects payments without a route.
  std::vector<OutcomeCounts> pathlen_histogram;
  std::vector<NodeRecord> nodes;
  std::vector<ConservationAudit> audits;
  SimTotals totals;
};

// Funds every node with initial_balance and opens one channel per topology
// edge with channel_funding_each_side on both sides; the first endpoint of
// each edge initiates and pays the on-chain fee. Throws InsufficientBalance
// when the balance cannot cover a node's channels.
NetworkState Bootstrap(const SimConfig& cfg, const Workload& workload);

struct SimResult {
  SimReport report;
  NetworkState final_state;
};

// Runs a given workload. Deterministic: equal inputs give equal results.
SimResult RunWorkload(const SimConfig& cfg, const Workload& workload);

// Generates the workload from cfg.workload and runs it.
SimResult Run(const SimConfig& cfg);

}  // namespace pcnsim

#endif  // PCNSIM_SIMULATION_H_
