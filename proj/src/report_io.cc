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

#include "pcnsim/report_io.h"

#include <fstream>
#include <functional>
#include <ostream>
#include <system_error>

#include "json.hpp"
#include "pcnsim/error.h"

namespace pcnsim {
namespace {

using Json = nlohmann::ordered_json;

constexpr Outcome kOutcomes[] = {
    Outcome::kRoutedOffChain,
    Outcome::kOnChainTooExpensive,
    Outcome::kOnChainNoRoute,
    Outcome::kFailedInsufficientFunds,
};

void WriteOutcomeHeader(std::ostream& os) {
  for (Outcome o : kOutcomes) os << ',' << OutcomeName(o);
  os << '\n';
}

void WriteCounts(std::ostream& os, const OutcomeCounts& counts) {
  for (Outcome o : kOutcomes) os << ',' << counts[static_cast<size_t>(o)];
  os << '\n';
}

double Units(Amount amount) { return amount.ToDouble(); }

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  body(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace

void WriteTransactionsCsv(const SimReport& report, std::ostream& os) {
  os << "id,sender,receiver,amount,outcome,hops,total_fee\n";
  for (const TxRecord& r : report.transactions) {
    os << r.id << ',' << r.tx.sender << ',' << r.tx.receiver << ','
       << r.tx.amount << ',' << OutcomeName(r.outcome) << ',' << r.hops << ','
       << r.total_fee << '\n';
  }
}

void WriteAmountHistogramCsv(const SimReport& report, std::ostream& os) {
  os << "bin_lower,bin_upper";
  WriteOutcomeHeader(os);
  for (const AmountBin& bin : report.amount_histogram) {
    os << bin.lower << ',';
    if (bin.upper == Amount::Max()) {
      os << "inf";
    } else {
      os << bin.upper;
    }
    WriteCounts(os, bin.counts);
  }
}

void WritePathLengthHistogramCsv(const SimReport& report, std::ostream& os) {
  os << "hops";
  WriteOutcomeHeader(os);
  for (size_t h = 0; h < report.pathlen_histogram.size(); ++h) {
    os << h;
    WriteCounts(os, report.pathlen_histogram[h]);
  }
}

void WriteNodeStatsCsv(const SimReport& report, std::ostream& os) {
  os << "node,degree,earned_fees,balance,wealth\n";
  for (const NodeRecord& n : report.nodes) {
    os << n.node << ',' << n.degree << ',' << n.earned_fees << ',' << n.balance
       << ',' << n.wealth << '\n';
  }
}

std::string SummaryJson(const SimReport& report) {
  const SimConfig& cfg = report.config;
  const SimTotals& t = report.totals;

  Json config;
  config["nodes"] = cfg.workload.n_nodes;
  config["transactions"] = cfg.workload.n_transactions;
  config["ba_m"] = cfg.workload.ba_m;
  config["mu"] = cfg.workload.lognormal_mu;
  config["sigma"] = cfg.workload.lognormal_sigma;
  config["seed"] = cfg.workload.seed;
  config["initial_balance"] = Units(cfg.initial_balance);
  config["funding"] = Units(cfg.channel_funding_each_side);
  config["chain_fee"] = Units(cfg.chain_fee);
  config["fee_policy"] = std::string(FeeKindName(cfg.fee_policy.kind));
  config["fee_rate"] = cfg.fee_policy.base_rate.ToString();
  config["flat_fee"] = Units(cfg.fee_policy.flat_fee);
  config["paper_literal_check"] =
      cfg.capacity_check == CapacityCheck::kPaperLiteral;
  config["audit_interval"] = cfg.audit_interval;

  Json counts;
  for (Outcome o : kOutcomes) {
    counts[std::string(OutcomeName(o))] =
        t.outcome_counts[static_cast<size_t>(o)];
  }

  Json totals;
  totals["n_transactions"] = report.transactions.size();
  totals["outcomes"] = counts;
  totals["has_route"] = t.has_route;
  totals["routing_fees"] = Units(t.routing_fees);
  totals["chain_fees_bootstrap"] = Units(t.chain_fees_bootstrap);
  totals["chain_fees_transactions"] = Units(t.chain_fees_transactions);
  totals["transaction_phase_spend"] = Units(t.transaction_phase_spend);
  totals["naive_onchain_cost"] = Units(t.naive_onchain_cost);
  totals["transferred_volume"] = Units(t.transferred_volume);
  totals["mean_hops_offchain"] = t.mean_hops_offchain;
  totals["degree_earnings_spearman"] = t.degree_earnings_spearman;
  totals["conservation_audits"] = report.audits.size();
  totals["conservation_ok"] = t.conservation_ok;

  Json root;
  root["config"] = config;
  root["totals"] = totals;
  return root.dump(2) + "\n";
}

void Emit(const SimReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + out_dir.string() + ": " + ec.message());
  }
  WriteFile(out_dir / "transactions.csv",
            [&](std::ostream& os) { WriteTransactionsCsv(report, os); });
  WriteFile(out_dir / "amount_histogram.csv",
            [&](std::ostream& os) { WriteAmountHistogramCsv(report, os); });
  WriteFile(out_dir / "pathlen_histogram.csv",
            [&](std::ostream& os) { WritePathLengthHistogramCsv(report, os); });
  WriteFile(out_dir / "node_stats.csv",
            [&](std::ostream& os) { WriteNodeStatsCsv(report, os); });
  WriteFile(out_dir / "summary.json",
            [&](std::ostream& os) { os << SummaryJson(report); });
}

}  // namespace pcnsim
