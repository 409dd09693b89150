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

#include "eprgame/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eprgame/philox.h"
#include "parallel.h"

namespace eprgame {
namespace {

// Running mean and sum of squared deviations.
struct Moments {
  double n = 0;
  double mean = 0;
  double m2 = 0;

  void Add(double v) {
    n += 1;
    const double delta = v - mean;
    mean += delta / n;
    m2 += delta * (v - mean);
  }

  void Merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * o.n / total;
    m2 += o.m2 + delta * delta * n * o.n / total;
    n = total;
  }

  double StandardError() const {
    if (n < 2) return 0;
    return std::sqrt(m2 / (n - 1)) / std::sqrt(n);
  }
};

struct ChunkResult {
  Moments alice;
  Moments bob;
  std::array<uint64_t, 16> counts{};
};

// Index 0..3 within the block of the drawn outcome pair.
int SampleBlockIndex(const std::array<double, 4>& block, double u) {
  std::array<double, 4> q;
  double total = 0;
  for (int i = 0; i < 4; ++i) {
    q[i] = std::max(0.0, block[i]);
    total += q[i];
  }
  const double target = u * total;
  double cumulative = 0;
  int last_positive = 0;
  for (int i = 0; i < 4; ++i) {
    if (q[i] <= 0) continue;
    last_positive = i;
    cumulative += q[i];
    if (target < cumulative) return i;
  }
  // Rounding can leave target at the very top of the range.
  return last_positive;
}

}  // namespace

std::pair<Outcome, Outcome> SampleOutcome(const JointBox& box, Setting a,
                                          Setting b, double u) {
  if (a.party != Party::kAlice || b.party != Party::kBob) {
    throw std::invalid_argument("SampleOutcome expects Alice then Bob");
  }
  const int i = SampleBlockIndex(box.Block(a.index, b.index), u);
  const Outcome alice = i < 2 ? Outcome::kPlus : Outcome::kMinus;
  const Outcome bob = i % 2 == 0 ? Outcome::kPlus : Outcome::kMinus;
  return {alice, bob};
}

EmpiricalEstimate Simulate(const PlayConfig& config, unsigned workers) {
  if (config.runs == 0) throw std::invalid_argument("runs must be positive");
  config.matrix.Validate();
  config.profile.Validate();

  const PayoffMatrix& m = config.matrix;
  const std::array<double, 4> alice_pay = {m.k, m.l, m.m, m.n};
  const std::array<double, 4> bob_pay = {m.k, m.m, m.l, m.n};
  const uint64_t chunks =
      (config.runs + kSimulationChunk - 1) / kSimulationChunk;
  std::vector<ChunkResult> results(chunks);

  internal::ParallelFor(chunks, workers, [&](size_t c) {
    ChunkResult& out = results[c];
    const uint64_t begin = c * kSimulationChunk;
    const uint64_t end = std::min(config.runs, begin + kSimulationChunk);
    for (uint64_t run = begin; run < end; ++run) {
      const auto words = Philox4x64::Generate(config.seed, run, 0);
      const int a = Philox4x64::ToUnit(words[0]) < config.profile.x ? 1 : 2;
      const int b = Philox4x64::ToUnit(words[1]) < config.profile.y ? 1 : 2;
      const int i = SampleBlockIndex(config.box.Block(a, b),
                                     Philox4x64::ToUnit(words[2]));
      ++out.counts[8 * (a - 1) + 4 * (b - 1) + i];
      out.alice.Add(alice_pay[i]);
      out.bob.Add(bob_pay[i]);
    }
  });

  Moments alice, bob;
  EmpiricalEstimate estimate;
  for (const ChunkResult& r : results) {
    alice.Merge(r.alice);
    bob.Merge(r.bob);
    for (int k = 0; k < 16; ++k) estimate.counts[k] += r.counts[k];
  }
  estimate.mean_a = alice.mean;
  estimate.mean_b = bob.mean;
  estimate.stderr_a = alice.StandardError();
  estimate.stderr_b = bob.StandardError();
  estimate.runs = config.runs;
  estimate.seed = config.seed;
  return estimate;
}

}  // namespace eprgame
