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

#include "pcnsim/workload.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "pcnsim/error.h"

namespace pcnsim {
namespace {

// Upper clamp for sampled amounts; ~10^11 units, far beyond any balance.
constexpr double kMaxTicks = 1e15;

constexpr uint64_t kTopologyStream = 0;
constexpr uint64_t kTransactionStream = 1;

uint64_t StreamSeed(uint64_t seed, uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ stream);
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back().push_back(c);
    }
  }
  return out;
}

int64_t ToInt(const std::string& s, size_t line_no) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "workload line " + std::to_string(line_no) +
                                       ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

void WorkloadConfig::Validate() const {
  if (ba_m < 1 || n_nodes <= ba_m) {
    throw Error(ErrorCode::kInvalidArgument,
                "need n_nodes > ba_m >= 1 (n_nodes=" + std::to_string(n_nodes) +
                    ", ba_m=" + std::to_string(ba_m) + ")");
  }
  if (!(lognormal_sigma > 0.0) || !std::isfinite(lognormal_mu)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lognormal sigma must be positive and mu finite");
  }
}

std::vector<Edge> GenerateTopology(const WorkloadConfig& cfg, Rng& rng) {
  cfg.Validate();
  const size_t m = cfg.ba_m;
  std::vector<Edge> edges;
  edges.reserve(m * (cfg.n_nodes - m));
  // Every edge contributes both endpoints, so a uniform draw from this list
  // selects a node with probability proportional to its degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * (cfg.n_nodes - m));

  auto link = [&](NodeId t, NodeId target) {
    edges.push_back({t, target});
    endpoints.push_back(t);
    endpoints.push_back(target);
  };

  const auto first = static_cast<NodeId>(m);
  for (NodeId seed_node = 0; seed_node < first; ++seed_node) {
    link(first, seed_node);
  }
  std::vector<NodeId> targets;
  for (auto t = static_cast<NodeId>(m + 1);
       t < static_cast<NodeId>(cfg.n_nodes); ++t) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId pick = endpoints[rng.UniformBelow(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (NodeId target : targets) link(t, target);
  }
  return edges;
}

Amount AmountFromLog(double log_amount) {
  const double ticks =
      std::exp(log_amount) * static_cast<double>(Amount::kTicksPerUnit);
  if (!(ticks >= 1.0)) return Amount::FromTicks(1);  // also catches NaN
  return Amount::FromTicks(std::llround(std::min(ticks, kMaxTicks)));
}

Amount SampleAmount(const WorkloadConfig& cfg, Rng& rng) {
  return AmountFromLog(rng.Normal(cfg.lognormal_mu, cfg.lognormal_sigma));
}

std::pair<NodeId, NodeId> SamplePair(size_t n_nodes, Rng& rng) {
  if (n_nodes < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two nodes");
  }
  const auto sender = static_cast<NodeId>(rng.UniformBelow(n_nodes));
  auto receiver = static_cast<NodeId>(rng.UniformBelow(n_nodes - 1));
  if (receiver >= sender) ++receiver;
  return {sender, receiver};
}

Workload GenerateWorkload(const WorkloadConfig& cfg) {
  cfg.Validate();
  Workload w;
  w.n_nodes = cfg.n_nodes;
  Rng topology_rng(StreamSeed(cfg.seed, kTopologyStream));
  w.edges = GenerateTopology(cfg, topology_rng);

  Rng tx_rng(StreamSeed(cfg.seed, kTransactionStream));
  w.transactions.reserve(cfg.n_transactions);
  for (size_t i = 0; i < cfg.n_transactions; ++i) {
    const auto [sender, receiver] = SamplePair(cfg.n_nodes, tx_rng);
    w.transactions.push_back({sender, receiver, SampleAmount(cfg, tx_rng)});
  }
  return w;
}

bool Workload::operator==(const Workload& other) const {
  if (n_nodes != other.n_nodes || edges != other.edges ||
      transactions.size() != other.transactions.size()) {
    return false;
  }
  for (size_t i = 0; i < transactions.size(); ++i) {
    const Transaction& x = transactions[i];
    const Transaction& y = other.transactions[i];
    if (x.sender != y.sender || x.receiver != y.receiver ||
        x.amount != y.amount) {
      return false;
    }
  }
  return true;
}

bool IsConnected(size_t n_nodes, const std::vector<Edge>& edges) {
  if (n_nodes == 0) return true;
  std::vector<size_t> parent(n_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t components = n_nodes;
  for (const Edge& e : edges) {
    const size_t ra = find(static_cast<size_t>(e.a));
    const size_t rb = find(static_cast<size_t>(e.b));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

void WriteWorkloadCsv(const Workload& workload, std::ostream& os) {
  os << "kind,x,y,amount\n";
  os << "nodes," << workload.n_nodes << ",,\n";
  for (const Edge& e : workload.edges) {
    os << "edge," << e.a << ',' << e.b << ",\n";
  }
  for (const Transaction& tx : workload.transactions) {
    os << "tx," << tx.sender << ',' << tx.receiver << ',' << tx.amount << '\n';
  }
}

Workload ReadWorkloadCsv(std::istream& is) {
  Workload w;
  std::string line;
  size_t line_no = 0;
  bool have_nodes = false;
  auto fail = [&line_no](const std::string& why) {
    throw Error(ErrorCode::kParse,
                "workload line " + std::to_string(line_no) + ": " + why);
  };
  auto check_node = [&](int64_t id) {
    if (id < 0 || static_cast<size_t>(id) >= w.n_nodes) {
      fail("node " + std::to_string(id) + " out of range");
    }
    return static_cast<NodeId>(id);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    const auto f = SplitCsv(line);
    if (f.size() != 4) fail("expected 4 columns");
    if (f[0] == "kind") continue;
    if (f[0] == "nodes") {
      const int64_t n = ToInt(f[1], line_no);
      if (n < 0) fail("negative node count");
      w.n_nodes = static_cast<size_t>(n);
      have_nodes = true;
    } else if (!have_nodes) {
      fail("'nodes' row must come first");
    } else if (f[0] == "edge") {
      w.edges.push_back({check_node(ToInt(f[1], line_no)),
                         check_node(ToInt(f[2], line_no))});
    } else if (f[0] == "tx") {
      Transaction tx{check_node(ToInt(f[1], line_no)),
                     check_node(ToInt(f[2], line_no)), Amount::Parse(f[3])};
      if (tx.sender == tx.receiver || tx.amount <= Amount::Zero()) {
        fail("transaction needs distinct endpoints and a positive amount");
      }
      w.transactions.push_back(tx);
    } else {
      fail("unknown row kind '" + f[0] + "'");
    }
  }
  if (!have_nodes) {
    throw Error(ErrorCode::kParse, "workload has no 'nodes' row");
  }
  return w;
}

}  // namespace pcnsim
