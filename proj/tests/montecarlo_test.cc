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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <random>

#include "eprgame/epr_game.h"
#include "eprgame/montecarlo.h"
#include "eprgame/philox.h"
#include "oracles.h"

namespace eprgame {
namespace {

const double kSqrt2 = std::sqrt(2.0);

TEST_CASE("Philox4x64-10 known answers") {
  // Reference outputs from an independent Philox4x64-10 implementation.
  using C = Philox4x64::Counter;
  CHECK(Philox4x64::Block({0, 0, 0, 0}, {0, 0}) ==
        C{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL,
          0xd7e772cee186176bULL, 0x7e68b68aec7ba23bULL});
  CHECK(Philox4x64::Block({1, 2, 3, 4}, {5, 6}) ==
        C{0xa39b5519339fe354ULL, 0xaceb1228efc25196ULL,
          0xa0a2e3c25aa5f4fcULL, 0x08d0cfa9332720dfULL});
  CHECK(Philox4x64::Block({7, 0, 0, 0}, {0x0123456789abcdefULL, 0}) ==
        C{0x8653ceb2864b740eULL, 0xb14433f34a33e297ULL,
          0x6987b35cbb537d34ULL, 0xa241ed37c704b737ULL});
  CHECK(Philox4x64::Generate(5, 1, 2) ==
        Philox4x64::Block({1, 2, 0, 0}, {5, 0}));
  CHECK(Philox4x64::ToUnit(0) == 0);
  CHECK(Philox4x64::ToUnit(~0ULL) < 1);
}

TEST_CASE("outcome sampling follows the block CDF") {
  const JointBox box = FromCoins({0.25, 0.5, 0.5, 0.5});
  // Block (S1, S1'): 0.125, 0.125, 0.375, 0.375.
  auto draw = [&](double u) { return SampleOutcome(box, kS1, kS1Prime, u); };
  CHECK(draw(0.0).first == Outcome::kPlus);
  CHECK(draw(0.1).second == Outcome::kPlus);
  CHECK(draw(0.2).second == Outcome::kMinus);
  CHECK(draw(0.3).first == Outcome::kMinus);
  CHECK(draw(0.3).second == Outcome::kPlus);
  CHECK(draw(0.99).second == Outcome::kMinus);
  CHECK(draw(1.0).second == Outcome::kMinus);
  CHECK_THROWS_AS(SampleOutcome(box, kS1Prime, kS1, 0.5),
                  std::invalid_argument);
  // Zero-probability outcomes are never drawn.
  const JointBox sure = FromCoins({1, 1, 1, 1});
  for (double u : {0.0, 0.5, 1.0}) {
    CHECK(SampleOutcome(sure, kS2, kS2Prime, u) ==
          std::pair{Outcome::kPlus, Outcome::kPlus});
  }
}

TEST_CASE("input checks") {
  PlayConfig config{{0, 1, 1, 0}, UniformBox(), {0.5, 0.5}, 0, 1};
  CHECK_THROWS_AS(Simulate(config), std::invalid_argument);
  config.runs = 10;
  config.profile.x = 2;
  CHECK_THROWS_AS(Simulate(config), std::invalid_argument);
}

TEST_CASE("a single run has zero standard error") {
  const PlayConfig config{{0, 1, 1, 0}, UniformBox(), {0.5, 0.5}, 1, 3};
  const EmpiricalEstimate e = Simulate(config);
  CHECK(e.stderr_a == 0);
  CHECK(e.runs == 1);
  uint64_t total = 0;
  for (uint64_t c : e.counts) total += c;
  CHECK(total == 1);
}

TEST_CASE("results do not depend on the worker count") {
  const PlayConfig config{{3, 0, 5, 1}, MaximalViolationBox(2), {0.3, 0.6},
                          3 * kSimulationChunk + 17, 99};
  const EmpiricalEstimate one = Simulate(config, 1);
  CHECK(Simulate(config, 2) == one);
  CHECK(Simulate(config, 7) == one);
  CHECK(Simulate(config, 0) == one);
}

TEST_CASE("per-block outcome frequencies pass a chi-square test") {
  // Four blocks per seed, 100 seeds, critical value at p = 0.001.
  const double critical = boost::math::quantile(
      boost::math::complement(boost::math::chi_squared(3), 0.001));
  const testing::Entries p = testing::OracleCoins(0.2, 0.7, 0.4, 0.9);
  const JointBox skewed = JointBox::Create(p, kInternalTolerance);
  int rejections = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const JointBox& box = seed % 2 == 0 ? skewed : MaximalViolationBox(1);
    const PlayConfig config{{0, 1, 1, 0}, box, {0.5, 0.5}, 100000, seed};
    const EmpiricalEstimate e = Simulate(config);
    for (int block = 0; block < 4; ++block) {
      double n = 0;
      for (int i = 0; i < 4; ++i) n += e.counts[4 * block + i];
      double stat = 0;
      for (int i = 0; i < 4; ++i) {
        const double expected = n * box.values()[4 * block + i];
        const double d = e.counts[4 * block + i] - expected;
        stat += d * d / expected;
      }
      if (stat > critical) ++rejections;
    }
  }
  // 400 tests at level 0.001: more than three rejections has probability
  // below 1e-3.
  CHECK(rejections <= 3);
}

TEST_CASE("setting frequencies follow the profile") {
  const PlayConfig config{{0, 1, 1, 0}, UniformBox(), {0.2, 0.7}, 200000, 5};
  const EmpiricalEstimate e = Simulate(config);
  double s1 = 0, s1p = 0;
  for (int k = 0; k < 16; ++k) {
    if (k < 8) s1 += e.counts[k];
    if ((k / 4) % 2 == 0) s1p += e.counts[k];
  }
  const double n = 200000;
  CHECK(std::abs(s1 / n - 0.2) < 4 * std::sqrt(0.2 * 0.8 / n));
  CHECK(std::abs(s1p / n - 0.7) < 4 * std::sqrt(0.7 * 0.3 / n));
}

TEST_CASE("means agree with the analytic payoff within four standard errors") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0, 1);
  int misses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PayoffMatrix m{4 * u(rng), 4 * u(rng), 4 * u(rng), 4 * u(rng)};
    const testing::Entries p = testing::OracleRandomBox(rng);
    const JointBox box = JointBox::Create(p, kInternalTolerance);
    const double x = u(rng), y = u(rng);
    const PlayConfig config{m, box, {x, y}, 20000, 1000 + uint64_t(trial)};
    const EmpiricalEstimate e = Simulate(config);
    const PayoffPair want = testing::OracleEprPayoff(m, p, x, y);
    if (std::abs(e.mean_a - want.alice) > 4 * e.stderr_a) ++misses;
    if (std::abs(e.mean_b - want.bob) > 4 * e.stderr_b) ++misses;
  }
  CHECK(misses <= 2);
}

TEST_CASE("chicken with the first maximal box at (0,0)") {
  const PlayConfig config{{0, 1, 1, 0}, MaximalViolationBox(1), {0, 0},
                          1000000, 7};
  const EmpiricalEstimate e = Simulate(config);
  const double want = (2 + kSqrt2) / 4;
  // Payoff is 1 with probability p14 + p15 in block (S2, S2').
  const double sd = std::sqrt(want * (1 - want));
  CHECK(std::abs(e.stderr_a - sd / 1000) < 1e-5);
  CHECK(std::abs(e.mean_a - want) < 4 * e.stderr_a);
  CHECK(e.mean_a == e.mean_b);
  for (int k = 0; k < 12; ++k) CHECK(e.counts[k] == 0);
}

}  // namespace
}  // namespace eprgame
