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
#include <cmath>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "pcnsim/error.h"

namespace pcnsim {
namespace {

WorkloadConfig Config(size_t n, size_t m, uint64_t seed = 1) {
  WorkloadConfig cfg;
  cfg.n_nodes = n;
  cfg.ba_m = m;
  cfg.seed = seed;
  return cfg;
}

std::vector<size_t> Degrees(size_t n, const std::vector<Edge>& edges) {
  std::vector<size_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[static_cast<size_t>(e.a)];
    ++degree[static_cast<size_t>(e.b)];
  }
  return degree;
}

TEST(TopologyTest, SmallestGraphIsAStar) {
  Rng rng(1);
  EXPECT_EQ(GenerateTopology(Config(3, 2), rng),
            (std::vector<Edge>{{2, 0}, {2, 1}}));
  Rng rng2(5);
  EXPECT_EQ(GenerateTopology(Config(2, 1), rng2), (std::vector<Edge>{{1, 0}}));
}

TEST(TopologyTest, FullScaleEdgeCountAndConnectivity) {
  Rng rng(42);
  const auto edges = GenerateTopology(Config(1000, 2), rng);
  EXPECT_EQ(edges.size(), 1996u);
  EXPECT_TRUE(IsConnected(1000, edges));
}

TEST(TopologyTest, InvalidConfigs) {
  Rng rng(1);
  EXPECT_THROW(GenerateTopology(Config(2, 2), rng), Error);
  EXPECT_THROW(GenerateTopology(Config(5, 0), rng), Error);
  WorkloadConfig bad = Config(10, 2);
  bad.lognormal_sigma = 0.0;
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(TopologyPropertyTest, SimpleConnectedAndHeavyTailed) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    for (size_t m : {1u, 2u, 3u}) {
      Rng rng(seed);
      const size_t n = 1000;
      const auto edges = GenerateTopology(Config(n, m), rng);
      ASSERT_EQ(edges.size(), m * (n - m));
      ASSERT_TRUE(IsConnected(n, edges));
      std::vector<std::pair<NodeId, NodeId>> pairs;
      for (const Edge& e : edges) {
        ASSERT_NE(e.a, e.b);
        ASSERT_GT(e.a, e.b);  // new node first, earlier node second
        pairs.emplace_back(e.a, e.b);
      }
      std::sort(pairs.begin(), pairs.end());
      ASSERT_EQ(std::adjacent_find(pairs.begin(), pairs.end()), pairs.end());

      const auto degree = Degrees(n, edges);
      const double mean = 2.0 * static_cast<double>(edges.size()) / n;
      const size_t max_degree = *std::max_element(degree.begin(), degree.end());
      EXPECT_GE(static_cast<double>(max_degree), 5.0 * mean)
          << "seed " << seed << " m " << m;
      EXPECT_GE(*std::min_element(degree.begin(), degree.end()), m);
    }
  }
}

TEST(IsConnectedTest, Basics) {
  EXPECT_TRUE(IsConnected(1, {}));
  EXPECT_FALSE(IsConnected(3, {{0, 1}}));
  EXPECT_TRUE(IsConnected(3, {{0, 1}, {2, 1}}));
}

TEST(AmountTest, FromLog) {
  // exp(2.95) = 19.10595..., rounded to the nearest tick.
  EXPECT_EQ(AmountFromLog(2.95), Amount::Parse("19.1060"));
  EXPECT_EQ(AmountFromLog(0.0), Amount::FromUnits(1));
  EXPECT_EQ(AmountFromLog(-30.0), Amount::FromTicks(1));
  EXPECT_EQ(AmountFromLog(std::nan("")), Amount::FromTicks(1));
  EXPECT_EQ(AmountFromLog(1000.0), Amount::FromTicks(1'000'000'000'000'000));
}

TEST(AmountTest, LogMomentsAndMedian) {
  WorkloadConfig cfg;
  Rng rng(2024);
  const size_t draws = 100000;
  std::vector<double> logs;
  std::vector<int64_t> ticks;
  for (size_t i = 0; i < draws; ++i) {
    const Amount a = SampleAmount(cfg, rng);
    ticks.push_back(a.ticks());
    logs.push_back(std::log(a.ToDouble()));
  }
  double sum = 0.0;
  for (double x : logs) sum += x;
  const double mean = sum / draws;
  double sq = 0.0;
  for (double x : logs) sq += (x - mean) * (x - mean);
  const double sd = std::sqrt(sq / (draws - 1));
  EXPECT_NEAR(mean, 2.95, 0.05);
  EXPECT_NEAR(sd, 1.2, 0.05);

  std::nth_element(ticks.begin(), ticks.begin() + draws / 2, ticks.end());
  const double median = static_cast<double>(ticks[draws / 2]) /
                        static_cast<double>(Amount::kTicksPerUnit);
  EXPECT_NEAR(median, 19.11, 0.5);
}

TEST(PairTest, TwoNodesSplitEvenly) {
  Rng rng(3);
  size_t zero_sends = 0;
  const size_t draws = 100000;
  for (size_t i = 0; i < draws; ++i) {
    const auto [s, r] = SamplePair(2, rng);
    ASSERT_NE(s, r);
    if (s == 0) ++zero_sends;
  }
  EXPECT_NEAR(static_cast<double>(zero_sends) / draws, 0.5, 0.02);
  EXPECT_THROW(SamplePair(1, rng), Error);
}

// Chi-square goodness of fit of sender and receiver marginals against the
// uniform distribution over ten nodes (df = 9, 0.1% critical value 27.877).
TEST(PairTest, MarginalsAreUniform) {
  Rng rng(4);
  const size_t n = 10;
  const size_t draws = 100000;
  std::vector<double> senders(n, 0.0), receivers(n, 0.0);
  for (size_t i = 0; i < draws; ++i) {
    const auto [s, r] = SamplePair(n, rng);
    ASSERT_NE(s, r);
    senders[static_cast<size_t>(s)] += 1.0;
    receivers[static_cast<size_t>(r)] += 1.0;
  }
  auto chi_square = [&](const std::vector<double>& counts) {
    const double expected = static_cast<double>(draws) / n;
    double stat = 0.0;
    for (double c : counts) stat += (c - expected) * (c - expected) / expected;
    return stat;
  };
  EXPECT_LT(chi_square(senders), 27.877);
  EXPECT_LT(chi_square(receivers), 27.877);
}

TEST(WorkloadTest, DeterministicAndStreamSeparated) {
  WorkloadConfig cfg = Config(50, 2, 9);
  cfg.n_transactions = 200;
  const Workload a = GenerateWorkload(cfg);
  EXPECT_TRUE(a == GenerateWorkload(cfg));
  EXPECT_EQ(a.transactions.size(), 200u);

  // The topology stream does not depend on the number of payments.
  WorkloadConfig longer = cfg;
  longer.n_transactions = 400;
  const Workload b = GenerateWorkload(longer);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_TRUE(std::equal(a.transactions.begin(), a.transactions.end(),
                         b.transactions.begin(),
                         [](const Transaction& x, const Transaction& y) {
                           return x.sender == y.sender &&
                                  x.receiver == y.receiver &&
                                  x.amount == y.amount;
                         }));

  WorkloadConfig other = cfg;
  other.seed = 10;
  EXPECT_FALSE(a == GenerateWorkload(other));
}

TEST(WorkloadTest, CsvRoundTrip) {
  WorkloadConfig cfg = Config(30, 2, 3);
  cfg.n_transactions = 100;
  const Workload w = GenerateWorkload(cfg);
  std::stringstream ss;
  WriteWorkloadCsv(w, ss);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("kind,x,y,amount\nnodes,30,,\nedge,2,0,\n", 0), 0u);
  std::istringstream in(text);
  const Workload back = ReadWorkloadCsv(in);
  EXPECT_TRUE(back == w);
  std::stringstream again;
  WriteWorkloadCsv(back, again);
  EXPECT_EQ(again.str(), text);
}

TEST(WorkloadTest, CsvErrors) {
  const char* bad[] = {
      "",
      "kind,x,y,amount\nedge,0,1,\n",
      "nodes,3,,\nedge,0,3,\n",
      "nodes,3,,\ntx,1,1,5\n",
      "nodes,3,,\ntx,0,1,0\n",
      "nodes,3,,\ntx,0,1\n",
      "nodes,3,,\nhop,0,1,\n",
      "nodes,3,,\ntx,0,1,abc\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    try {
      ReadWorkloadCsv(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
}

}  // namespace
}  // namespace pcnsim
