// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPRGAME_MONTECARLO_H_
#define EPRGAME_MONTECARLO_H_

// Repeated play of a game through a box. Run i draws three uniforms from
// Philox4x64-10 at counter (i, 0, 0, 0) under key (seed, 0): the first picks
// Alice's setting (S1 when below x), the second Bob's (S1' when below y), the
// third the outcome pair by inverse CDF on the selected block.

#include <array>
#include <cstdint>
#include <utility>

#include "eprgame/game_core.h"
#include "eprgame/probability_box.h"

namespace eprgame {

struct PlayConfig {
  PayoffMatrix matrix;
  JointBox box;
  StrategyProfile profile;
  uint64_t runs = 0;
  uint64_t seed = 0;
};

struct EmpiricalEstimate {
  double mean_a = 0;
  double mean_b = 0;
  // Sample standard deviation (n - 1 denominator) over sqrt(runs); zero when
  // runs == 1.
  double stderr_a = 0;
  double stderr_b = 0;
  // counts[k - 1] is the number of runs that landed on p_k.
  std::array<uint64_t, 16> counts{};
  uint64_t runs = 0;
  uint64_t seed = 0;

  bool operator==(const EmpiricalEstimate&) const = default;
};

// Runs are processed in chunks of this size; statistics are merged in chunk
// order, so the result is independent of the number of workers.
inline constexpr uint64_t kSimulationChunk = 1 << 16;

// Draws an outcome pair from block (a, b) using the uniform `u` in [0, 1).
std::pair<Outcome, Outcome> SampleOutcome(const JointBox& box, Setting a,
                                          Setting b, double u);

// Throws std::invalid_argument if runs == 0 or the profile or matrix is
// invalid. `workers` == 0 uses the hardware concurrency.
EmpiricalEstimate Simulate(const PlayConfig& config, unsigned workers = 0);

}  // namespace eprgame

#endif  // EPRGAME_MONTECARLO_H_
