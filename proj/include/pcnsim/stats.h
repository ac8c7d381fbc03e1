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

#ifndef PCNSIM_STATS_H_
#define PCNSIM_STATS_H_

#include <span>
#include <vector>

namespace pcnsim {

// 1-based ranks; tied values share the mean of their ranks.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of the average ranks. Returns 0 when either side is
// constant.
double SpearmanRankCorrelation(std::span<const double> x,
                               std::span<const double> y);

}  // namespace pcnsim

#endif  // PCNSIM_STATS_H_
