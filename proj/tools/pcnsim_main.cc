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

// pcnsim: batch payment-channel-network simulation.
//
//   pcnsim --nodes 1000 --transactions 100000 --seed 7 --out out/
//   pcnsim --config run.cfg --fee-policy proportional
//
// Settings may come from a config file of "key = value" lines ('#' starts a
// comment); keys are the long flag names without dashes. Flags given on the
// command line override the file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pcnsim/error.h"
#include "pcnsim/report_io.h"
#include "pcnsim/simulation.h"
#include "pcnsim/state_dump.h"
#include "pcnsim/workload.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitSimulation = 4;

struct CliOptions {
  std::string funding = "1000";
  std::string initial_balance = "1000000";
  std::string chain_fee = "0.41";
  std::string fee_rate = "0.005";
  std::string flat_fee = "0";
  std::string fee_policy = "imbalance";
  bool paper_literal_check = false;
  std::string workload_in;
  std::string workload_out;
  std::string dump_state;
};

pcnsim::SimConfig ToSimConfig(const pcnsim::SimConfig& base,
                              const CliOptions& opts) {
  pcnsim::SimConfig cfg = base;
  cfg.channel_funding_each_side = pcnsim::Amount::Parse(opts.funding);
  cfg.initial_balance = pcnsim::Amount::Parse(opts.initial_balance);
  cfg.chain_fee = pcnsim::Amount::Parse(opts.chain_fee);
  cfg.fee_policy.kind = pcnsim::ParseFeeKind(opts.fee_policy);
  cfg.fee_policy.base_rate = pcnsim::Rate::Parse(opts.fee_rate);
  cfg.fee_policy.flat_fee = pcnsim::Amount::Parse(opts.flat_fee);
  cfg.capacity_check = opts.paper_literal_check
                           ? pcnsim::CapacityCheck::kPaperLiteral
                           : pcnsim::CapacityCheck::kTight;
  return cfg;
}

void PrintSummary(const pcnsim::SimReport& report) {
  const auto& t = report.totals;
  auto count = [&t](pcnsim::Outcome o) {
    return t.outcome_counts[static_cast<size_t>(o)];
  };
  std::printf("transactions            %zu\n", report.transactions.size());
  std::printf("  routed off-chain      %zu\n",
              count(pcnsim::Outcome::kRoutedOffChain));
  std::printf("  on-chain, too costly  %zu\n",
              count(pcnsim::Outcome::kOnChainTooExpensive));
  std::printf("  on-chain, no route    %zu\n",
              count(pcnsim::Outcome::kOnChainNoRoute));
  std::printf("  failed (funds)        %zu\n",
              count(pcnsim::Outcome::kFailedInsufficientFunds));
  std::printf("mean hops off-chain     %.3f\n", t.mean_hops_offchain);
  std::printf("routing fees            %s\n", t.routing_fees.ToString().c_str());
  std::printf("chain fees (bootstrap)  %s\n",
              t.chain_fees_bootstrap.ToString().c_str());
  std::printf("chain fees (payments)   %s\n",
              t.chain_fees_transactions.ToString().c_str());
  std::printf("naive on-chain cost     %s\n",
              t.naive_onchain_cost.ToString().c_str());
  std::printf("conservation            %s\n", t.conservation_ok ? "ok" : "BROKEN");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Payment channel network simulator"};
  app.set_config("--config", "", "Config file of 'key = value' lines");

  pcnsim::SimConfig base;
  CliOptions opts;
  app.add_option("--nodes", base.workload.n_nodes, "Number of nodes")
      ->capture_default_str();
  app.add_option("--transactions", base.workload.n_transactions,
                 "Number of payments")
      ->capture_default_str();
  app.add_option("--ba-m", base.workload.ba_m,
                 "Barabasi-Albert attachment count")
      ->capture_default_str();
  app.add_option("--mu", base.workload.lognormal_mu, "Mean of log(amount)")
      ->capture_default_str();
  app.add_option("--sigma", base.workload.lognormal_sigma,
                 "Standard deviation of log(amount)")
      ->capture_default_str();
  app.add_option("--seed", base.workload.seed, "Master random seed")
      ->capture_default_str();
  app.add_option("--funding", opts.funding, "Channel funding per side")
      ->capture_default_str();
  app.add_option("--initial-balance", opts.initial_balance,
                 "Initial on-chain balance per node")
      ->capture_default_str();
  app.add_option("--chain-fee", opts.chain_fee, "Fee per on-chain interaction")
      ->capture_default_str();
  app.add_option("--fee-rate", opts.fee_rate,
                 "Proportional routing fee rate (decimal or p/q)")
      ->capture_default_str();
  app.add_option("--flat-fee", opts.flat_fee, "Fee per hop for --fee-policy flat")
      ->capture_default_str();
  app.add_option("--fee-policy", opts.fee_policy, "Routing fee policy")
      ->check(CLI::IsMember({"flat", "proportional", "imbalance"}))
      ->capture_default_str();
  app.add_flag("--paper-literal-check", opts.paper_literal_check,
               "Also reserve the edge's own fee in the capacity check");
  app.add_option("--audit-interval", base.audit_interval,
                 "Transactions between conservation audits")
      ->capture_default_str();
  app.add_option("--out", base.out_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--workload-in", opts.workload_in,
                 "Replay topology and payments from this CSV");
  app.add_option("--workload-out", opts.workload_out,
                 "Write the generated workload to this CSV");
  app.add_option("--dump-state", opts.dump_state,
                 "Write the final network state to this file");

  CLI11_PARSE(app, argc, argv);

  pcnsim::SimConfig cfg;
  pcnsim::Workload workload;
  try {
    cfg = ToSimConfig(base, opts);
    cfg.Validate();
    if (!opts.workload_in.empty()) {
      std::ifstream in(opts.workload_in);
      if (!in) {
        std::cerr << "pcnsim: cannot open " << opts.workload_in << '\n';
        return kExitIo;
      }
      workload = pcnsim::ReadWorkloadCsv(in);
      cfg.workload.n_nodes = workload.n_nodes;
      cfg.workload.n_transactions = workload.transactions.size();
    } else {
      cfg.workload.Validate();
      workload = pcnsim::GenerateWorkload(cfg.workload);
    }
  } catch (const pcnsim::Error& e) {
    std::cerr << "pcnsim: " << e.what() << '\n';
    return e.code() == pcnsim::ErrorCode::kIo ? kExitIo : kExitConfig;
  }

  try {
    if (!opts.workload_out.empty()) {
      std::ofstream out(opts.workload_out, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw pcnsim::Error(pcnsim::ErrorCode::kIo,
                            "cannot open " + opts.workload_out);
      }
      pcnsim::WriteWorkloadCsv(workload, out);
      if (!out.flush()) {
        throw pcnsim::Error(pcnsim::ErrorCode::kIo,
                            "write failed: " + opts.workload_out);
      }
    }

    const pcnsim::SimResult result = pcnsim::RunWorkload(cfg, workload);
    pcnsim::Emit(result.report, cfg.out_dir);

    if (!opts.dump_state.empty()) {
      std::ofstream out(opts.dump_state, std::ios::binary | std::ios::trunc);
      out << pcnsim::DumpState(result.final_state);
      if (!out.flush()) {
        throw pcnsim::Error(pcnsim::ErrorCode::kIo,
                            "cannot write " + opts.dump_state);
      }
    }
    PrintSummary(result.report);
    return result.report.totals.conservation_ok ? 0 : kExitSimulation;
  } catch (const pcnsim::Error& e) {
    std::cerr << "pcnsim: " << e.what() << '\n';
    switch (e.code()) {
      case pcnsim::ErrorCode::kIo:
        return kExitIo;
      case pcnsim::ErrorCode::kInsufficientBalance:
      case pcnsim::ErrorCode::kInvalidArgument:
        return kExitConfig;
      default:
        return kExitSimulation;
    }
  }
}
