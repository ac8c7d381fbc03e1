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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Instances on which the router and the
// exhaustive oracle disagree are written to acceptance_failures/ as routing
// fixtures (see state_dump.h).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pcnsim/oracle.h"
#include "pcnsim/report_io.h"
#include "pcnsim/router.h"
#include "pcnsim/simulation.h"
#include "pcnsim/state_dump.h"
#include "pcnsim/workload.h"
#include "test_instances.h"

namespace pcnsim {
namespace {

namespace fs = std::filesystem;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::vector<std::pair<std::string, Verdict>> g_results;

void Report(const std::string& name, const Verdict& v) {
  std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(),
              v.detail.c_str());
  std::fflush(stdout);
  g_results.emplace_back(name, v);
}

std::string Format(const char* fmt, double a = 0, double b = 0, double c = 0,
                   double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c, d);
  return buf;
}

size_t Count(const SimReport& r, Outcome o) {
  return r.totals.outcome_counts[static_cast<size_t>(o)];
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimConfig FullScaleConfig(uint64_t seed) {
  SimConfig cfg;
  cfg.workload.seed = seed;
  return cfg;
}

struct RoutedInstance {
  testing::RandomInstance instance;
  RouteQuote quote;
};

// 1. Router versus exhaustive search on 500 random instances.
std::vector<RoutedInstance> OracleEquivalence() {
  const fs::path failures = "acceptance_failures";
  const auto start = Clock::now();
  std::vector<RoutedInstance> routed;
  size_t mismatches = 0;
  size_t feasible = 0;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    const FeeKind kind = seed % 2 == 0 ? FeeKind::kProportional
                                       : FeeKind::kProportionalImbalance;
    auto inst = testing::MakeRandomInstance(seed, kind);
    const auto oracle = ExhaustiveCheapestPath(inst.state, inst.policy, inst.tx);
    auto quote = CheapestPath(inst.state, inst.policy, inst.tx);
    const bool agree = oracle.has_value() == quote.has_value() &&
                       (!oracle || oracle->total_fee == quote->total_fee);
    if (!agree) {
      ++mismatches;
      fs::create_directories(failures);
      std::ofstream(failures / ("instance_" + std::to_string(seed) + ".txt"))
          << "# " << inst.description << "\n"
          << "# oracle "
          << (oracle ? oracle->total_fee.ToString() : std::string("none"))
          << ", router "
          << (quote ? quote->total_fee.ToString() : std::string("none"))
          << "\n"
          << DumpInstance(inst.state, inst.tx);
    }
    if (quote) {
      ++feasible;
      routed.push_back({std::move(inst), std::move(*quote)});
    }
  }
  const double elapsed = Seconds(start);
  Verdict v;
  v.pass = mismatches == 0 && elapsed < 60.0;
  v.detail = Format("500 instances, %.0f feasible, %.0f mismatches, %.2f s",
                    static_cast<double>(feasible),
                    static_cast<double>(mismatches), elapsed);
  Report("criterion 1 (oracle equivalence)", v);
  return routed;
}

// 2. Cut-constraint certification of every route, plus capacity mutation.
void LpCertification(const std::vector<RoutedInstance>& routed) {
  size_t infeasible = 0;
  size_t mutations = 0;
  size_t undetected = 0;
  for (const RoutedInstance& r : routed) {
    const auto& inst = r.instance;
    if (!CheckLpConstraints(inst.state, inst.policy, r.quote.path, inst.tx)
             .feasible()) {
      ++infeasible;
    }
    for (size_t t = 0; t < r.quote.hops(); ++t) {
      NetworkState broken = inst.state;
      broken.SetCapacity(r.quote.path[t], r.quote.path[t + 1],
                         r.quote.edge_flows[t] - Amount::FromTicks(1));
      ++mutations;
      if (CheckLpConstraints(broken, inst.policy, r.quote.path, inst.tx)
              .violated_cuts.empty()) {
        ++undetected;
      }
    }
  }
  Verdict v;
  v.pass = infeasible == 0 && undetected == 0 && !routed.empty();
  v.detail = Format("%.0f routes certified with %.0f infeasible; %.0f "
                    "mutations, %.0f undetected",
                    static_cast<double>(routed.size()),
                    static_cast<double>(infeasible),
                    static_cast<double>(mutations),
                    static_cast<double>(undetected));
  Report("criterion 2 (cut constraints)", v);
}

struct SeedRun {
  uint64_t seed;
  SimReport report;
  double seconds;
};

void Conservation(const SeedRun& run) {
  const auto& audits = run.report.audits;
  size_t bad = 0;
  for (const auto& a : audits) bad += a.ok ? 0 : 1;
  Verdict v;
  v.pass = run.report.totals.conservation_ok && bad == 0 &&
           audits.size() == 100 && run.seconds < 300.0;
  v.detail = Format("%.0f audits, %.0f broken, run took %.1f s",
                    static_cast<double>(audits.size()),
                    static_cast<double>(bad), run.seconds);
  Report("criterion 3 (conservation)", v);
}

void ReplicationBands(const std::vector<SeedRun>& runs) {
  struct Band {
    const char* name;
    double (*value)(const SimReport&);
    double lo;
    double hi;
  };
  const Band bands[] = {
      {"4a has-route fraction",
       [](const SimReport& r) {
         return static_cast<double>(r.totals.has_route) / r.transactions.size();
       },
       0.97, 1.0},
      {"4b off-chain fraction",
       [](const SimReport& r) {
         return static_cast<double>(Count(r, Outcome::kRoutedOffChain)) /
                r.transactions.size();
       },
       0.95, 1.0},
      {"4c mean off-chain hops",
       [](const SimReport& r) { return r.totals.mean_hops_offchain; }, 3.0,
       5.0},
      {"4d transaction-phase spend",
       [](const SimReport& r) {
         return r.totals.transaction_phase_spend.ToDouble();
       },
       0.0, 0.0},
  };
  for (const Band& band : bands) {
    Verdict v;
    double lo = band.lo;
    double hi = band.hi;
    std::string per_seed;
    for (const SeedRun& run : runs) {
      if (std::string(band.name).rfind("4d", 0) == 0) {
        hi = 0.25 * run.report.totals.naive_onchain_cost.ToDouble();
      }
      const double x = band.value(run.report);
      v.pass = v.pass && x >= lo && x <= hi;
      per_seed += Format(" seed %.0f=%.4f", static_cast<double>(run.seed), x);
    }
    v.detail = Format("band [%.4f, %.4f];", lo, hi) + per_seed;
    Report(std::string("criterion ") + band.name, v);
  }
}

void BreakEven(const SimReport& report) {
  const int64_t chain_fee_ticks = report.config.chain_fee.ticks();
  const int64_t rate_den = report.config.fee_policy.base_rate.denominator;
  const int64_t rate_num = report.config.fee_policy.base_rate.numerator;
  const Amount big = Amount::FromUnits(82);
  const Amount small = Amount::FromUnits(27);
  size_t violations = 0;
  size_t multi_hop_big = 0;
  size_t small_total = 0;
  size_t small_offchain = 0;
  size_t small_has_route = 0;
  for (const TxRecord& r : report.transactions) {
    if (r.tx.amount < small) {
      ++small_total;
      if (r.outcome == Outcome::kRoutedOffChain) ++small_offchain;
      if (r.hops > 0) ++small_has_route;
    }
    if (r.outcome != Outcome::kRoutedOffChain) continue;
    const __int128 lhs = static_cast<__int128>(r.tx.amount.ticks()) * rate_num *
                         static_cast<int64_t>(r.hops - 1);
    if (lhs > static_cast<__int128>(chain_fee_ticks) * rate_den) ++violations;
    if (r.tx.amount > big && r.hops >= 2) ++multi_hop_big;
  }
  Verdict a;
  a.pass = violations == 0;
  a.detail = Format("%.0f routed records violate amount*rate*(hops-1) <= "
                    "chain fee",
                    static_cast<double>(violations));
  Report("criterion 5a (break-even bound)", a);

  Verdict b;
  b.pass = multi_hop_big == 0;
  b.detail = Format("%.0f multi-hop off-chain routes above 82 units",
                    static_cast<double>(multi_hop_big));
  Report("criterion 5b (no multi-hop above 82)", b);

  const double offchain_frac =
      static_cast<double>(small_offchain) / static_cast<double>(small_total);
  const double route_frac =
      static_cast<double>(small_has_route) / static_cast<double>(small_total);
  Verdict c;
  c.pass = offchain_frac > 0.99;
  c.detail = Format("%.0f payments below 27 units, off-chain fraction %.4f "
                    "(needs > 0.99); with a route: %.4f",
                    static_cast<double>(small_total), offchain_frac,
                    route_frac);
  Report("criterion 5c (payments below 27 routed)", c);
}

void DegreeEarnings(const SeedRun& run) {
  Verdict v;
  const double rho = run.report.totals.degree_earnings_spearman;
  v.pass = rho > 0.5;
  v.detail = Format("Spearman rho = %.4f (needs > 0.5)", rho);
  Report("criterion 6 (degree vs earnings)", v);
}

void Determinism(const SimReport& first, const SimReport& second) {
  const fs::path base = "acceptance_out";
  fs::remove_all(base);
  Emit(first, base / "run_a");
  Emit(second, base / "run_b");
  Verdict v;
  for (const char* name : {"transactions.csv", "summary.json"}) {
    const std::string a = ReadFile(base / "run_a" / name);
    const std::string b = ReadFile(base / "run_b" / name);
    const bool same = !a.empty() && a == b;
    v.pass = v.pass && same;
    v.detail += std::string(name) + (same ? " identical" : " DIFFERS") +
                Format(" (%.0f bytes); ", static_cast<double>(a.size()));
  }
  Report("criterion 7 (determinism)", v);
}

void WorkloadStatistics() {
  const WorkloadConfig cfg;  // 1000 nodes, m = 2, 100000 payments
  const Workload w = GenerateWorkload(cfg);
  double sum = 0.0;
  for (const Transaction& tx : w.transactions) sum += std::log(tx.amount.ToDouble());
  const double n = static_cast<double>(w.transactions.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (const Transaction& tx : w.transactions) {
    const double d = std::log(tx.amount.ToDouble()) - mean;
    sq += d * d;
  }
  const double sd = std::sqrt(sq / (n - 1.0));
  const bool connected = IsConnected(w.n_nodes, w.edges);
  Verdict v;
  v.pass = std::abs(mean - 2.95) <= 0.05 && std::abs(sd - 1.2) <= 0.05 &&
           w.edges.size() == 1996 && connected && w.transactions.size() == 100000;
  v.detail = Format("log mean %.4f, log sd %.4f, %.0f edges, ", mean, sd,
                    static_cast<double>(w.edges.size())) +
             (connected ? "connected" : "DISCONNECTED");
  Report("criterion 8 (workload statistics)", v);
}

SeedRun RunSeed(const SimConfig& cfg) {
  const auto start = Clock::now();
  SimResult result = Run(cfg);
  const double seconds = Seconds(start);
  std::printf("  run seed=%llu policy=%s: %.1f s\n",
              static_cast<unsigned long long>(cfg.workload.seed),
              std::string(FeeKindName(cfg.fee_policy.kind)).c_str(), seconds);
  std::fflush(stdout);
  return {cfg.workload.seed, std::move(result.report), seconds};
}

int Main() {
  const std::vector<RoutedInstance> routed = OracleEquivalence();
  LpCertification(routed);

  std::vector<SeedRun> runs;
  for (uint64_t seed : {1, 2, 3}) runs.push_back(RunSeed(FullScaleConfig(seed)));
  Conservation(runs.front());
  ReplicationBands(runs);

  SimConfig proportional = FullScaleConfig(1);
  proportional.fee_policy.kind = FeeKind::kProportional;
  BreakEven(RunSeed(proportional).report);

  DegreeEarnings(runs.front());
  Determinism(runs.front().report, RunSeed(FullScaleConfig(1)).report);
  WorkloadStatistics();

  size_t failed = 0;
  for (const auto& [name, v] : g_results) failed += v.pass ? 0 : 1;
  std::printf("%zu of %zu acceptance checks passed\n",
              g_results.size() - failed, g_results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pcnsim

int main() { return pcnsim::Main(); }
