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

#include "eprgame/reproduce.h"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "eprgame/epr_game.h"
#include "eprgame/game_core.h"
#include "eprgame/games_catalog.h"
#include "eprgame/probability_box.h"
#include "eprgame/search.h"

namespace eprgame {
namespace {

constexpr double kExact = 1e-12;
constexpr uint64_t kQuantumSamples = 1000;

std::string Num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string Pair(double a, double b) {
  return "(" + Num(a) + "," + Num(b) + ")";
}

class Recorder {
 public:
  explicit Recorder(std::string scenario) { report_.scenario = scenario; }

  void Check(const std::string& name, bool passed, const std::string& expected,
             const std::string& actual) {
    report_.checks.push_back({name, passed, expected, actual});
  }

  void Near(const std::string& name, double expected, double actual,
            double tol = kExact) {
    Check(name, std::abs(expected - actual) <= tol, Num(expected), Num(actual));
  }

  void Note(const std::string& note) { report_.notes.push_back(note); }

  ReproductionReport Finish() {
    report_.passed = !report_.checks.empty();
    for (const ReproCheck& c : report_.checks) {
      report_.passed = report_.passed && c.passed;
    }
    return report_;
  }

 private:
  ReproductionReport report_;
};

bool SameSet(const EquilibriumSet& a, const EquilibriumSet& b, double tol) {
  return a.points.size() == b.points.size() &&
         a.segments.size() == b.segments.size() &&
         a.entire_square == b.entire_square &&
         HausdorffDistance(a, b) <= tol;
}

// Closed form, enumerator and payoffs of a classical family.
void CheckClassical(Recorder& r, const std::string& tag,
                    const GameFamily& family,
                    const std::vector<ClassicalEquilibrium>& expected) {
  const std::vector<ClassicalEquilibrium> closed = ClassicalEquilibria(family);
  EquilibriumSet expected_set;
  for (const ClassicalEquilibrium& e : expected) {
    expected_set.points.push_back(e.profile);
  }
  const EquilibriumSet closed_set = ClassicalEquilibriumSet(family);
  r.Check(tag + " closed-form equilibria",
          SameSet(closed_set, expected_set, kExact), expected_set.ToString(),
          closed_set.ToString());
  const BlockPayoffs blocks = ClassicalBlockPayoffs(family.matrix());
  const EquilibriumSet enumerated = EnumerateEquilibria(blocks);
  r.Check(tag + " enumerated equilibria",
          SameSet(enumerated, expected_set, kExact), expected_set.ToString(),
          enumerated.ToString());
  for (const ClassicalEquilibrium& e : expected) {
    const PayoffPair got = TwoCoinPayoff(family.matrix(), e.profile);
    const bool ok = std::abs(got.alice - e.payoff.alice) <= kExact &&
                    std::abs(got.bob - e.payoff.bob) <= kExact;
    r.Check(tag + " payoff at " + Pair(e.profile.x, e.profile.y), ok,
            Pair(e.payoff.alice, e.payoff.bob), Pair(got.alice, got.bob));
  }
}

ReproductionReport PdClassical() {
  Recorder r("pd-classical");
  const GameFamily pd = GameFamily::PrisonersDilemma({3, 0, 5, 1});
  CheckClassical(r, "PD (3,0,5,1)", pd, {{"(0,0)", {0, 0}, {1, 1}}});
  return r.Finish();
}

ReproductionReport PdQuantum() {
  Recorder r("pd-quantum");
  const GameFamily pd = GameFamily::PrisonersDilemma({3, 0, 5, 1});
  const ConstraintSet set = ConstraintSetFor(pd, "(0,0)");
  const SampleResult sample =
      SampleBoxes(kQuantumSamples, kReproductionSeed, set);
  uint64_t satisfied = 0, persists = 0, certified = 0, nonfactorizable = 0;
  for (const JointBox& box : sample.boxes) {
    if (ConstraintSatisfied(box, set).satisfied) ++satisfied;
    const BlockPayoffs blocks = EprBlockPayoffs(pd.matrix(), box);
    if (EnumerateEquilibria(blocks).Contains({0, 0}) &&
        IsEquilibrium(blocks, {0, 0}, 1e-9)) {
      ++persists;
    }
    if (NashInequalityResiduals(pd.matrix(), box, {0, 0}).IsEquilibrium(1e-9)) {
      ++certified;
    }
    if (!std::holds_alternative<CoinProfile>(Factorize(box))) {
      ++nonfactorizable;
    }
  }
  const std::string n = std::to_string(sample.boxes.size());
  r.Check("boxes satisfy " + set.label, satisfied == sample.boxes.size(), n,
          std::to_string(satisfied));
  r.Check("(0,0) is an equilibrium", persists == sample.boxes.size(), n,
          std::to_string(persists));
  r.Check("(0,0) passes the free-entry inequalities",
          certified == sample.boxes.size(), n, std::to_string(certified));
  r.Check("sample reaches non-factorizable boxes", nonfactorizable > 0, "> 0",
          std::to_string(nonfactorizable));
  r.Note("seed " + std::to_string(kReproductionSeed) + ", acceptance rate " +
         Num(sample.stats.AcceptanceRate()));
  return r.Finish();
}

ReproductionReport ShClassical() {
  Recorder r("sh-classical");
  const GameFamily sh = GameFamily::StagHunt({4, 0, 3, 3});
  CheckClassical(r, "SH (4,0,3,3)", sh,
                 {{"(0,0)", {0, 0}, {3, 3}},
                  {"mixed", {0.75, 0.75}, {3, 3}},
                  {"(1,1)", {1, 1}, {4, 4}}});
  return r.Finish();
}

ReproductionReport ShQuantumCases() {
  Recorder r("sh-quantum-cases");
  const GameFamily sh = GameFamily::StagHunt({4, 0, 3, 3});
  for (const std::string& target : ConstraintTargets(FamilyKind::kStagHunt)) {
    const ConstraintSet set = ConstraintSetFor(sh, target);
    const SampleResult sample =
        SampleBoxes(kQuantumSamples, kReproductionSeed, set);
    std::map<std::string, uint64_t> arising;
    uint64_t explained = 0, target_kept = 0;
    for (const JointBox& box : sample.boxes) {
      const EquilibriumSet eq =
          EnumerateEquilibria(EprBlockPayoffs(sh.matrix(), box));
      const std::vector<Candidate> candidates =
          QuantumStagHuntCandidates(sh, box);
      bool all_explained = eq.segments.empty() && !eq.entire_square;
      for (const StrategyProfile& p : eq.points) {
        bool matched = false;
        for (const Candidate& c : candidates) {
          if (!c.profile) continue;
          if (std::hypot(c.profile->x - p.x, c.profile->y - p.y) <= 1e-6) {
            if (!matched) ++arising[c.name];
            matched = true;
          }
        }
        all_explained = all_explained && matched;
      }
      if (all_explained) ++explained;
      if (eq.Contains(TargetProfile(sh, target))) ++target_kept;
    }
    const std::string n = std::to_string(sample.boxes.size());
    r.Check(set.label + ": equilibria within the five candidates",
            explained == sample.boxes.size(), n, std::to_string(explained));
    r.Check(set.label + ": target " + target + " persists",
            target_kept == sample.boxes.size(), n,
            std::to_string(target_kept));
    std::string tally;
    for (const auto& [name, count] : arising) {
      tally += (tally.empty() ? "" : ", ") + name + " x" +
               std::to_string(count);
    }
    r.Note(set.label + " (" + n + " boxes, free dimension " +
           std::to_string(sample.stats.free_dimension) +
           "): candidates arising: " + tally);
  }
  return r.Finish();
}

ReproductionReport ChickenClassical() {
  Recorder r("chicken-classical");
  CheckClassical(r, "Chicken alpha=1 beta=1", GameFamily::Chicken(1, 1),
                 {{"(1,0)", {1, 0}, {1, 1}},
                  {"mixed", {0.5, 0.5}, {0.5, 0.5}},
                  {"(0,1)", {0, 1}, {1, 1}}});
  CheckClassical(r, "Chicken alpha=1 beta=2", GameFamily::Chicken(1, 2),
                 {{"(1,0)", {1, 0}, {1, 2}},
                  {"mixed", {1.0 / 3, 1.0 / 3}, {2.0 / 3, 2.0 / 3}},
                  {"(0,1)", {0, 1}, {2, 1}}});
  return r.Finish();
}

void CheckPayoff(Recorder& r, const AnalysisReport& a,
                 const StrategyProfile& p, double expected) {
  const PayoffPair got = MixedPayoffs(a.blocks, p);
  r.Check("payoff at " + Pair(p.x, p.y),
          std::abs(got.alice - expected) <= kExact &&
              std::abs(got.bob - expected) <= kExact,
          Pair(expected, expected), Pair(got.alice, got.bob));
}

ReproductionReport ChickenSet(int which) {
  Recorder r("chicken-set" + std::to_string(which));
  const GameFamily chicken = GameFamily::Chicken(1, 1);
  const JointBox box = MaximalViolationBox(which);
  const ConstraintSet set = ConstraintSetFor(chicken, "mixed");
  const AnalysisReport a = Analyze(chicken.matrix(), box, {set});
  r.Check("box satisfies " + set.label, a.constraints[0].satisfied, "true",
          a.constraints[0].satisfied ? "true" : "false");
  const double high = (2 + std::sqrt(2.0)) / 4;
  const double low = (2 - std::sqrt(2.0)) / 4;
  if (which == 1) {
    const EquilibriumSet expected{{{0, 0}, {1, 1}}, {}, false};
    r.Check("equilibria", SameSet(a.equilibria, expected, kExact),
            expected.ToString(), a.equilibria.ToString());
    CheckPayoff(r, a, {0, 0}, high);
    CheckPayoff(r, a, {1, 1}, low);
    return r.Finish();
  }
  std::string pure;
  for (const StrategyProfile& p : a.equilibria.PureProfiles(kExact)) {
    pure += (pure.empty() ? "" : ", ") + Pair(p.x, p.y);
  }
  r.Check("pure equilibria", pure == "(0,1), (1,0), (1,1)",
          "(0,1), (1,0), (1,1)", pure);
  for (const StrategyProfile& p :
       {StrategyProfile{1, 1}, StrategyProfile{1, 0}, StrategyProfile{0, 1}}) {
    CheckPayoff(r, a, p, high);
  }
  // Both players are indifferent along the edges x = 1 and y = 1, so the
  // weak equilibria form those two edges with the three corners as ends.
  const EquilibriumSet edges{
      {}, {{FreeAxis::kX, 1, 0, 1}, {FreeAxis::kY, 1, 0, 1}}, false};
  r.Check("full equilibrium set", SameSet(a.equilibria, edges, kExact),
          edges.ToString(), a.equilibria.ToString());
  r.Note("the three pure equilibria are the endpoints of the edges x=1 and "
         "y=1, along which every profile pays " + Num(high));
  return r.Finish();
}

ReproductionReport ShMaximalSetsIncompatible() {
  Recorder r("sh-maximal-sets-incompatible");
  const GameFamily sh = GameFamily::StagHunt({4, 0, 3, 3});
  const double bound = (2 - std::sqrt(2.0)) / 8;
  for (int which = 1; which <= 2; ++which) {
    const JointBox box = MaximalViolationBox(which);
    for (const std::string& target : ConstraintTargets(FamilyKind::kStagHunt)) {
      const ConstraintCheck check =
          ConstraintSatisfied(box, ConstraintSetFor(sh, target));
      const double worst = check.MaxAbsResidual();
      r.Check("set " + std::to_string(which) + " vs " + check.label,
              !check.satisfied && worst >= bound - kExact,
              "unsatisfied, residual >= " + Num(bound),
              std::string(check.satisfied ? "satisfied" : "unsatisfied") +
                  ", residual " + Num(worst));
    }
  }
  return r.Finish();
}

const std::map<std::string, std::function<ReproductionReport()>>& Catalog() {
  static const auto* catalog =
      new std::map<std::string, std::function<ReproductionReport()>>{
          {"pd-classical", PdClassical},
          {"pd-quantum", PdQuantum},
          {"sh-classical", ShClassical},
          {"sh-quantum-cases", ShQuantumCases},
          {"chicken-classical", ChickenClassical},
          {"chicken-set1", [] { return ChickenSet(1); }},
          {"chicken-set2", [] { return ChickenSet(2); }},
          {"sh-maximal-sets-incompatible", ShMaximalSetsIncompatible},
      };
  return *catalog;
}

}  // namespace

std::vector<std::string> ScenarioNames() {
  return {"pd-classical",      "pd-quantum",   "sh-classical",
          "sh-quantum-cases",  "chicken-classical", "chicken-set1",
          "chicken-set2",      "sh-maximal-sets-incompatible"};
}

ReproductionReport Reproduce(const std::string& scenario) {
  const auto& catalog = Catalog();
  const auto it = catalog.find(scenario);
  if (it == catalog.end()) {
    throw std::invalid_argument("unknown scenario: " + scenario);
  }
  return it->second();
}

}  // namespace eprgame
