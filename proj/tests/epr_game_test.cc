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

#include <cmath>
#include <random>

#include "eprgame/epr_game.h"
#include "oracles.h"

namespace eprgame {
namespace {

const double kSqrt2 = std::sqrt(2.0);

PayoffMatrix RandomMatrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5, 5);
  return {u(rng), u(rng), u(rng), u(rng)};
}

TEST_CASE("equality labels") {
  CHECK(SumEquals({1, 2, 9, 10}, 1).label == "p1+p2+p9+p10=1");
  CHECK(MakeEquality({{2, 2}, {5, -3}}, 0).label == "2p2-3p5=0");
  CHECK(MakeEquality({{3, 0.5}}, 0.25).label == "0.5p3=0.25");
  ConstraintSet bad{"bad", {MakeEquality({{1, 0}}, 0)}};
  CHECK_THROWS_AS(bad.Validate(), std::invalid_argument);
}

TEST_CASE("constraint residuals are signed") {
  const JointBox box = UniformBox();
  const ConstraintSet set{"t", {SumEquals({1, 2}, 0.5), SumEquals({1}, 0)}};
  const ConstraintCheck check = ConstraintSatisfied(box, set);
  CHECK_FALSE(check.satisfied);
  REQUIRE(check.residuals.size() == 2);
  CHECK(check.residuals[0] == 0);
  CHECK(check.residuals[1] == 0.25);
  CHECK(check.MaxAbsResidual() == 0.25);
}

TEST_CASE("omega of coin boxes factors into coin differences") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const double r = u(rng), s = u(rng), rp = u(rng), sp = u(rng);
    const OmegaCoefficients w = ComputeOmega(FromCoins({r, s, rp, sp}));
    const double d = (r - s) * (rp - sp);
    CHECK(w.omega1 == doctest::Approx(d).epsilon(1e-12));
    CHECK(w.omega2 == doctest::Approx(-d).epsilon(1e-12));
    CHECK(w.omega3 == doctest::Approx(-d).epsilon(1e-12));
    CHECK(w.omega4 == doctest::Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("omega sums to zero on every valid box") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10000; ++trial) {
    const JointBox box =
        JointBox::Create(testing::OracleRandomBox(rng), kInternalTolerance);
    CHECK(std::abs(ComputeOmega(box).Sum()) < 1e-12);
  }
}

TEST_CASE("omega of the maximal boxes") {
  // Oracle: p1 - p5 - p9 + p13 with one dependent and three free entries.
  const OmegaCoefficients w1 = ComputeOmega(MaximalViolationBox(1));
  CHECK(std::abs(w1.omega1 + kSqrt2 / 4) < 1e-15);
  const OmegaCoefficients w2 = ComputeOmega(MaximalViolationBox(2));
  CHECK(std::abs(w2.omega1 - kSqrt2 / 4) < 1e-15);
}

TEST_CASE("block payoffs match the direct expectation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng);
    const testing::Entries p = testing::OracleRandomBox(rng);
    const JointBox box = JointBox::Create(p, kInternalTolerance);
    const double x = u(rng), y = u(rng);
    const PayoffPair got = MixedPayoffs(EprBlockPayoffs(m, box), {x, y});
    const PayoffPair want = testing::OracleEprPayoff(m, p, x, y);
    CHECK(got.alice == doctest::Approx(want.alice).epsilon(1e-12));
    CHECK(got.bob == doctest::Approx(want.bob).epsilon(1e-12));
  }
}

TEST_CASE("free-entry residuals agree with direct deviation payoffs") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng);
    const testing::Entries p = testing::OracleRandomBox(rng);
    const JointBox box = JointBox::Create(p, kInternalTolerance);
    StrategyProfile profile{u(rng), u(rng)};
    if (trial % 4 == 0) profile.x = 0;
    if (trial % 4 == 1) profile.y = 1;
    const NashResiduals r = NashInequalityResiduals(m, box, profile);
    const PayoffPair here =
        testing::OracleEprPayoff(m, p, profile.x, profile.y);
    const double alice_dev = std::max(
        testing::OracleEprPayoff(m, p, 0, profile.y).alice,
        testing::OracleEprPayoff(m, p, 1, profile.y).alice);
    const double bob_dev =
        std::max(testing::OracleEprPayoff(m, p, profile.x, 0).bob,
                 testing::OracleEprPayoff(m, p, profile.x, 1).bob);
    CHECK(r.alice == doctest::Approx(here.alice - alice_dev).epsilon(1e-9));
    CHECK(r.bob == doctest::Approx(here.bob - bob_dev).epsilon(1e-9));
  }
}

TEST_CASE("factorizable boxes reproduce the four-coin game") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng);
    const double r = u(rng), s = u(rng), rp = u(rng), sp = u(rng);
    const double x = u(rng), y = u(rng);
    // Four-coin game: the chosen coins land heads with probability
    // x r + (1 - x) s and y r' + (1 - y) s'; outcomes are independent.
    const double ha = x * r + (1 - x) * s;
    const double hb = y * rp + (1 - y) * sp;
    const PayoffPair want{
        m.k * ha * hb + m.l * ha * (1 - hb) + m.m * (1 - ha) * hb +
            m.n * (1 - ha) * (1 - hb),
        m.k * ha * hb + m.m * ha * (1 - hb) + m.l * (1 - ha) * hb +
            m.n * (1 - ha) * (1 - hb)};
    const PayoffPair got =
        MixedPayoffs(EprBlockPayoffs(m, FromCoins({r, s, rp, sp})), {x, y});
    CHECK(got.alice == doctest::Approx(want.alice).epsilon(1e-12));
    CHECK(got.bob == doctest::Approx(want.bob).epsilon(1e-12));
  }
}

TEST_CASE("equilibria are invariant under positive affine payoff maps") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng);
    const double scale = 0.1 + 3 * u(rng);
    const double shift = 10 * (u(rng) - 0.5);
    const PayoffMatrix mapped{scale * m.k + shift, scale * m.l + shift,
                              scale * m.m + shift, scale * m.n + shift};
    const JointBox box =
        JointBox::Create(testing::OracleRandomBox(rng), kInternalTolerance);
    const EquilibriumSet a = EnumerateEquilibria(EprBlockPayoffs(m, box));
    const EquilibriumSet b = EnumerateEquilibria(EprBlockPayoffs(mapped, box));
    CHECK(HausdorffDistance(a, b) < 1e-9);
  }
}

TEST_CASE("analysis of the chicken game with the first maximal box") {
  const PayoffMatrix chicken{0, 1, 1, 0};
  const AnalysisReport report = Analyze(chicken, MaximalViolationBox(1));
  const EquilibriumSet& eq = report.equilibria;
  REQUIRE(eq.points.size() == 2);
  CHECK(eq.segments.empty());
  CHECK(eq.Contains({0, 0}, 1e-12));
  CHECK(eq.Contains({1, 1}, 1e-12));
  for (size_t i = 0; i < eq.points.size(); ++i) {
    const double want =
        eq.points[i].x == 0 ? (2 + kSqrt2) / 4 : (2 - kSqrt2) / 4;
    CHECK(std::abs(report.point_payoffs[i].alice - want) < 1e-12);
    CHECK(std::abs(report.point_payoffs[i].bob - want) < 1e-12);
  }
  CHECK_FALSE(report.factorizable);
  CHECK(std::abs(report.chsh - 2 * kSqrt2) < 1e-12);
  CHECK(report.ch.Violates());
}

TEST_CASE("analysis reports constraint checks in order") {
  const ConstraintSet zero{"zero", {SumEquals({5, 7}, 0)}};
  const ConstraintSet half{"half", {SumEquals({5, 7}, 0.5)}};
  const AnalysisReport report =
      Analyze({3, 0, 5, 1}, UniformBox(), {zero, half});
  REQUIRE(report.constraints.size() == 2);
  CHECK_FALSE(report.constraints[0].satisfied);
  CHECK(report.constraints[1].satisfied);
  CHECK(report.factorizable);
}

}  // namespace
}  // namespace eprgame
