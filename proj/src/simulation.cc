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

#include "pcnsim/simulation.h"

#include <algorithm>
#include <cmath>

#include "pcnsim/error.h"
#include "pcnsim/stats.h"

namespace pcnsim {
namespace {

constexpr int kBinsPerDecade = 8;
constexpr int kFirstEdgeExponent = -2 * kBinsPerDecade;  // 10^-2
constexpr int kLastEdgeExponent = 4 * kBinsPerDecade;    // 10^4

size_t OutcomeIndex(Outcome outcome) { return static_cast<size_t>(outcome); }

void RequireNonNegative(Amount amount, const char* what) {
  if (amount < Amount::Zero()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is negative");
  }
}

}  // namespace

void SimConfig::Validate() const {
  RequireNonNegative(initial_balance, "initial balance");
  RequireNonNegative(channel_funding_each_side, "channel funding");
  RequireNonNegative(chain_fee, "chain fee");
  RequireNonNegative(fee_policy.flat_fee, "flat fee");
  if (fee_policy.base_rate.numerator < 0 ||
      fee_policy.base_rate.denominator <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "fee rate must be non-negative");
  }
  if (audit_interval == 0) {
    throw Error(ErrorCode::kInvalidArgument, "audit interval must be positive");
  }
}

std::vector<AmountBin> MakeAmountBins() {
  std::vector<Amount> edges;
  for (int k = kFirstEdgeExponent; k <= kLastEdgeExponent; ++k) {
    const double units =
        std::pow(10.0, static_cast<double>(k) / kBinsPerDecade);
    edges.push_back(Amount::FromTicks(
        std::llround(units * static_cast<double>(Amount::kTicksPerUnit))));
  }
  std::vector<AmountBin> bins;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    bins.push_back({edges[i], edges[i + 1], {}});
  }
  bins.front().lower = Amount::Zero();
  bins.back().upper = Amount::Max();
  return bins;
}

size_t AmountBinIndex(const std::vector<AmountBin>& bins, Amount amount) {
  auto it = std::upper_bound(
      bins.begin(), bins.end(), amount,
      [](Amount a, const AmountBin& bin) { return a < bin.upper; });
  return std::min(static_cast<size_t>(it - bins.begin()), bins.size() - 1);
}

NetworkState Bootstrap(const SimConfig& cfg, const Workload& workload) {
  NetworkState state(workload.n_nodes, cfg.initial_balance, cfg.chain_fee);
  for (const Edge& e : workload.edges) {
    state.OpenChannel(e.a, e.b, cfg.channel_funding_each_side,
                      cfg.channel_funding_each_side);
  }
  return state;
}

SimResult RunWorkload(const SimConfig& cfg, const Workload& workload) {
  cfg.Validate();
  NetworkState state = Bootstrap(cfg, workload);

  SimReport report;
  report.config = cfg;
  report.amount_histogram = MakeAmountBins();
  SimTotals& totals = report.totals;
  totals.chain_fees_bootstrap = state.burned();

  auto audit = [&](size_t done) {
    const Amount held = state.TotalHeld();
    const bool ok = held == state.initial_supply();
    report.audits.push_back({done, held, ok});
    totals.conservation_ok = totals.conservation_ok && ok;
  };

  size_t offchain_hops = 0;
  report.transactions.reserve(workload.transactions.size());
  for (size_t i = 0; i < workload.transactions.size(); ++i) {
    const Transaction& tx = workload.transactions[i];
    std::optional<RouteQuote> quote =
        CheapestPath(state, cfg.fee_policy, tx, cfg.capacity_check);
    const FundingCheck funding{state.balance(tx.sender) >=
                               tx.amount + cfg.chain_fee};
    const SettlementDecision decision =
        Decide(std::move(quote), cfg.chain_fee, funding);

    TxRecord record;
    record.id = i;
    record.tx = tx;
    record.outcome = decision.outcome;
    if (decision.quote) {
      record.hops = decision.quote->hops();
      record.total_fee = decision.quote->total_fee;
      ++totals.has_route;
    }

    switch (decision.outcome) {
      case Outcome::kRoutedOffChain:
        state.ApplyRoute(*decision.quote);
        totals.routing_fees += record.total_fee;
        totals.transferred_volume += tx.amount;
        offchain_hops += record.hops;
        break;
      case Outcome::kOnChainTooExpensive:
      case Outcome::kOnChainNoRoute:
        state.DirectTransfer(tx);
        totals.chain_fees_transactions += cfg.chain_fee;
        totals.transferred_volume += tx.amount;
        break;
      case Outcome::kFailedInsufficientFunds:
        break;
    }

    ++totals.outcome_counts[OutcomeIndex(record.outcome)];
    ++report.amount_histogram[AmountBinIndex(report.amount_histogram,
                                             tx.amount)]
          .counts[OutcomeIndex(record.outcome)];
    if (report.pathlen_histogram.size() <= record.hops) {
      report.pathlen_histogram.resize(record.hops + 1, OutcomeCounts{});
    }
    ++report.pathlen_histogram[record.hops][OutcomeIndex(record.outcome)];
    report.transactions.push_back(record);

    if ((i + 1) % cfg.audit_interval == 0) audit(i + 1);
  }
  if (report.audits.empty() ||
      report.audits.back().after_transactions != workload.transactions.size()) {
    audit(workload.transactions.size());
  }

  totals.transaction_phase_spend =
      totals.routing_fees + totals.chain_fees_transactions;
  totals.naive_onchain_cost =
      cfg.chain_fee * static_cast<int64_t>(workload.transactions.size());
  const size_t routed =
      totals.outcome_counts[OutcomeIndex(Outcome::kRoutedOffChain)];
  totals.mean_hops_offchain =
      routed == 0 ? 0.0
                  : static_cast<double>(offchain_hops) /
                        static_cast<double>(routed);

  std::vector<double> degrees;
  std::vector<double> earnings;
  for (size_t v = 0; v < state.node_count(); ++v) {
    const auto node = static_cast<NodeId>(v);
    NodeRecord rec{node, state.degree(node), state.account(node).earned_fees,
                   state.balance(node), state.Wealth(node)};
    degrees.push_back(static_cast<double>(rec.degree));
    earnings.push_back(static_cast<double>(rec.earned_fees.ticks()));
    report.nodes.push_back(rec);
  }
  totals.degree_earnings_spearman = SpearmanRankCorrelation(degrees, earnings);

  return {std::move(report), std::move(state)};
}

SimResult Run(const SimConfig& cfg) {
  cfg.workload.Validate();
  cfg.Validate();
  return RunWorkload(cfg, GenerateWorkload(cfg.workload));
}

}  // namespace pcnsim
