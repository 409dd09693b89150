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

#include "eprgame/games_catalog.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eprgame {
namespace {

constexpr double kDivisionGuard = 1e-12;

void Require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void RequireTarget(const GameFamily& family, const std::string& target) {
  const std::vector<std::string> targets = ConstraintTargets(family.kind());
  if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
    throw std::invalid_argument("unknown target '" + target + "' for " +
                                FamilyPrefix(family.kind()));
  }
}

ConstraintSet Labelled(const GameFamily& family, const std::string& target,
                       std::vector<LinearEquality> equalities) {
  return {FamilyPrefix(family.kind()) + "-" + target, std::move(equalities)};
}

// s = 0 = s': both second-setting coins land on minus.
std::vector<LinearEquality> SecondCoinsMinus() {
  return {SumEquals({5}, 0), SumEquals({7}, 0), SumEquals({9}, 0),
          SumEquals({10}, 0), SumEquals({16}, 1)};
}

// Coins (h, t) with alpha (1 - h) = beta t, scaled so both stay in [0, 1].
std::pair<double, double> ChickenMixedCoins(double alpha, double beta,
                                            double t) {
  const double scale = std::max(alpha, beta);
  return {1 - t * beta / scale, t * alpha / scale};
}

}  // namespace

std::string FamilyPrefix(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPrisonersDilemma:
      return "pd";
    case FamilyKind::kStagHunt:
      return "sh";
    case FamilyKind::kChicken:
      return "chicken";
  }
  return "";
}

GameFamily GameFamily::PrisonersDilemma(const PayoffMatrix& m) {
  m.Validate();
  Require(m.m > m.k && m.k > m.n && m.n > m.l,
          "prisoner's dilemma requires M > K > N > L");
  return GameFamily(FamilyKind::kPrisonersDilemma, m, 0, 0);
}

GameFamily GameFamily::StagHunt(const PayoffMatrix& m) {
  m.Validate();
  Require(m.k > m.m && m.m >= m.n && m.n > m.l,
          "stag hunt requires K > M >= N > L");
  Require(m.m + m.n > m.k + m.l, "stag hunt requires M + N > K + L");
  return GameFamily(FamilyKind::kStagHunt, m, 0, 0);
}

GameFamily GameFamily::Chicken(double alpha, double beta) {
  Require(std::isfinite(alpha) && std::isfinite(beta),
          "chicken parameters must be finite");
  Require(alpha > 0, "chicken requires 0 < alpha");
  Require(alpha + beta > alpha, "chicken requires alpha < alpha + beta");
  return GameFamily(FamilyKind::kChicken, {0, alpha, beta, 0}, alpha, beta);
}

DeltaParams Deltas(const PayoffMatrix& m) {
  DeltaParams d;
  d.d1 = m.m - m.k;
  d.d2 = m.n - m.l;
  d.d3 = d.d2 - d.d1;
  d.d4 = m.l + m.m - 2 * m.n;
  return d;
}

std::vector<ClassicalEquilibrium> ClassicalEquilibria(
    const GameFamily& family) {
  const PayoffMatrix& m = family.matrix();
  switch (family.kind()) {
    case FamilyKind::kPrisonersDilemma:
      return {{"(0,0)", {0, 0}, {m.n, m.n}}};
    case FamilyKind::kStagHunt: {
      const DeltaParams d = Deltas(m);
      const double ratio = d.d2 / d.d3;
      const double mixed = ratio * ratio * d.d3 + ratio * d.d4 + m.n;
      return {{"(0,0)", {0, 0}, {m.n, m.n}},
              {"mixed", {ratio, ratio}, {mixed, mixed}},
              {"(1,1)", {1, 1}, {m.k, m.k}}};
    }
    case FamilyKind::kChicken: {
      const double a = family.alpha();
      const double b = family.beta();
      const double q = a / (a + b);
      const double mixed = a * b / (a + b);
      return {{"(1,0)", {1, 0}, {a, b}},
              {"mixed", {q, q}, {mixed, mixed}},
              {"(0,1)", {0, 1}, {b, a}}};
    }
  }
  return {};
}

EquilibriumSet ClassicalEquilibriumSet(const GameFamily& family) {
  EquilibriumSet set;
  for (const ClassicalEquilibrium& e : ClassicalEquilibria(family)) {
    set.points.push_back(e.profile);
  }
  std::sort(set.points.begin(), set.points.end(),
            [](const StrategyProfile& a, const StrategyProfile& b) {
              return a.x < b.x || (a.x == b.x && a.y < b.y);
            });
  return set;
}

std::vector<std::string> ConstraintTargets(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPrisonersDilemma:
      return {"(0,0)", "(1,1)"};
    case FamilyKind::kStagHunt:
      return {"(0,0)", "mixed", "(1,1)"};
    case FamilyKind::kChicken:
      return {"(1,0)", "(0,1)", "mixed"};
  }
  return {};
}

StrategyProfile TargetProfile(const GameFamily& family,
                              const std::string& target) {
  RequireTarget(family, target);
  if (target == "mixed") {
    for (const ClassicalEquilibrium& e : ClassicalEquilibria(family)) {
      if (e.target == "mixed") return e.profile;
    }
  }
  return {target[1] == '1' ? 1.0 : 0.0, target[3] == '1' ? 1.0 : 0.0};
}

ConstraintSet ConstraintSetFor(const GameFamily& family,
                               const std::string& target) {
  RequireTarget(family, target);
  switch (family.kind()) {
    case FamilyKind::kPrisonersDilemma:
      if (target == "(0,0)") {
        return Labelled(family, target, SecondCoinsMinus());
      }
      // r = 0 = r'.
      return Labelled(family, target,
                      {SumEquals({1, 2}, 0), SumEquals({1, 3}, 0)});
    case FamilyKind::kStagHunt:
      if (target == "(0,0)") {
        return Labelled(family, target, SecondCoinsMinus());
      }
      if (target == "mixed") {
        return Labelled(family, target,
                        {SumEquals({1}, 1), SumEquals({6}, 1),
                         SumEquals({11}, 1), SumEquals({16}, 1)});
      }
      return Labelled(family, target,
                      {SumEquals({5}, 0), SumEquals({6}, 0), SumEquals({9}, 0),
                       SumEquals({11}, 0), SumEquals({7, 8}, 1),
                       SumEquals({10, 12}, 1), SumEquals({4}, 1)});
    case FamilyKind::kChicken: {
      if (target == "(1,0)") {
        // r = 1 and s' = 0.
        return Labelled(family, target,
                        {SumEquals({1, 2}, 1), SumEquals({5, 7}, 0)});
      }
      if (target == "(0,1)") {
        // r' = 1 and s = 0.
        return Labelled(family, target,
                        {SumEquals({1, 3}, 1), SumEquals({9, 10}, 0)});
      }
      const double a = family.alpha();
      const double b = family.beta();
      if (a == b) {
        return Labelled(family, target,
                        {SumEquals({1, 2, 9, 10}, 1),
                         SumEquals({1, 3, 5, 7}, 1)});
      }
      // alpha (1 - r') = beta s' and alpha (1 - r) = beta s.
      return Labelled(
          family, target,
          {MakeEquality({{2, a}, {4, a}, {5, -b}, {7, -b}}, 0),
           MakeEquality({{3, a}, {4, a}, {9, -b}, {10, -b}}, 0)});
    }
  }
  throw std::invalid_argument("unknown family");
}

ConstraintSet ConstraintSetByName(const GameFamily& family,
                                  const std::string& name) {
  const std::string prefix = FamilyPrefix(family.kind()) + "-";
  if (name.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("constraint '" + name +
                                "' does not belong to family " +
                                FamilyPrefix(family.kind()));
  }
  return ConstraintSetFor(family, name.substr(prefix.size()));
}

CoinProfile ClassicalCoinsFor(const GameFamily& family,
                              const std::string& target, double free_value) {
  RequireTarget(family, target);
  Require(free_value >= 0 && free_value <= 1, "free coin must lie in [0,1]");
  const double f = free_value;
  switch (family.kind()) {
    case FamilyKind::kPrisonersDilemma:
      if (target == "(0,0)") return {f, 0, f, 0};
      return {0, f, 0, f};
    case FamilyKind::kStagHunt:
      if (target == "(0,0)") return {f, 0, f, 0};
      if (target == "mixed") return {1, 0, 1, 0};
      return {0, f, 0, f};
    case FamilyKind::kChicken: {
      if (target == "(1,0)") return {1, f, f, 0};
      if (target == "(0,1)") return {f, 0, 1, f};
      const auto [h, t] = ChickenMixedCoins(family.alpha(), family.beta(), f);
      return {h, t, h, t};
    }
  }
  throw std::invalid_argument("unknown family");
}

std::vector<Candidate> QuantumStagHuntCandidates(const GameFamily& family,
                                                 const JointBox& box) {
  Require(family.kind() == FamilyKind::kStagHunt,
          "quantum stag hunt candidates need a stag hunt");
  const DeltaParams d = Deltas(family);
  const double ratio = d.d2 / d.d3;
  const double p1 = box.p(1), p8 = box.p(8), p12 = box.p(12),
               p13 = box.p(13);

  std::vector<Candidate> out;
  out.push_back({"(0,0)", StrategyProfile{0, 0}});
  out.push_back({"(1,1)", StrategyProfile{1, 1}});
  out.push_back({"delta-ratio", StrategyProfile{ratio, ratio}});
  Candidate p1_form{"p1-form", std::nullopt};
  if (p1 > kDivisionGuard) {
    p1_form.profile =
        StrategyProfile{ratio * (1 - p12) / p1, ratio * (1 - p8) / p1};
  }
  out.push_back(p1_form);
  Candidate p13_form{"p13-form", std::nullopt};
  if (p13 > kDivisionGuard) {
    p13_form.profile = StrategyProfile{1 - ratio * (1 - p8) / p13,
                                       1 - ratio * (1 - p12) / p13};
  }
  out.push_back(p13_form);
  for (Candidate& c : out) {
    c.in_square = c.profile && c.profile->x >= 0 && c.profile->x <= 1 &&
                  c.profile->y >= 0 && c.profile->y <= 1;
  }
  return out;
}

}  // namespace eprgame
