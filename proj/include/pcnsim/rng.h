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

#ifndef PCNSIM_RNG_H_
#define PCNSIM_RNG_H_

#include <cstdint>
#include <random>

namespace pcnsim {

// Seeded generator with a fully specified output sequence on every platform.
//
// The engine is std::mt19937_64, whose sequence the C++ standard fixes. The
// standard library's distributions are implementation-defined, so the
// variates below are derived from raw engine output by hand:
//   UniformBelow  - bitmask rejection sampling
//   Uniform01     - top 53 bits scaled to [0, 1)
//   StandardNormal - Marsaglia polar method, spare value cached
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformBelow(uint64_t bound);
  double Uniform01();
  double StandardNormal();
  double Normal(double mean, double stddev) {
    return mean + stddev * StandardNormal();
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 mixing step; used to derive independent stream seeds from one
// master seed.
uint64_t SplitMix64(uint64_t x);

}  // namespace pcnsim

#endif  // PCNSIM_RNG_H_
