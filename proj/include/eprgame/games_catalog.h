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

#ifndef EPRGAME_GAMES_CATALOG_H_
#define EPRGAME_GAMES_CATALOG_H_

#include <optional>
#include <string>
#include <vector>

#include "eprgame/epr_game.h"
#include "eprgame/game_core.h"
#include "eprgame/probability_box.h"

namespace eprgame {

enum class FamilyKind { kPrisonersDilemma, kStagHunt, kChicken };

// Short identifier used in constraint names and JSON: "pd", "sh", "chicken".
std::string FamilyPrefix(FamilyKind kind);

class GameFamily {
 public:
  // Each factory throws std::invalid_argument naming the violated
  // inequality.
  // Requires M > K > N > L.
  static GameFamily PrisonersDilemma(const PayoffMatrix& matrix);
  // Requires K > M >= N > L and M + N > K + L.
  static GameFamily StagHunt(const PayoffMatrix& matrix);
  // (K, L, M, N) = (0, alpha, beta, 0) with alpha > 0 and beta > 0.
  static GameFamily Chicken(double alpha, double beta);

  FamilyKind kind() const { return kind_; }
  const PayoffMatrix& matrix() const { return matrix_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  GameFamily(FamilyKind kind, PayoffMatrix matrix, double alpha, double beta)
      : kind_(kind), matrix_(matrix), alpha_(alpha), beta_(beta) {}

  FamilyKind kind_;
  PayoffMatrix matrix_;
  double alpha_;
  double beta_;
};

// d1 = M - K, d2 = N - L, d3 = d2 - d1, d4 = L + M - 2N.
struct DeltaParams {
  double d1 = 0;
  double d2 = 0;
  double d3 = 0;
  double d4 = 0;
};

DeltaParams Deltas(const PayoffMatrix& matrix);
inline DeltaParams Deltas(const GameFamily& family) {
  return Deltas(family.matrix());
}

struct ClassicalEquilibrium {
  std::string target;  // "(0,0)", "(1,1)", "(1,0)", "(0,1)" or "mixed"
  StrategyProfile profile;
  PayoffPair payoff;
};

// Closed-form classical equilibria of the family with their payoffs.
std::vector<ClassicalEquilibrium> ClassicalEquilibria(
    const GameFamily& family);

// The same list as an EquilibriumSet.
EquilibriumSet ClassicalEquilibriumSet(const GameFamily& family);

// Targets accepted by ConstraintSetFor for this family. PD also accepts
// "(1,1)", the alternative placement of its pure equilibrium.
std::vector<std::string> ConstraintTargets(FamilyKind kind);

// The profile a target names: the corner for "(a,b)" targets, the classical
// mixed equilibrium for "mixed". Throws std::invalid_argument for unknown
// targets.
StrategyProfile TargetProfile(const GameFamily& family,
                              const std::string& target);

// Linear equalities on p1..p16 that a factorizable box must satisfy for the
// coin-level condition behind `target`. Labelled "<prefix>-<target>", for
// example "pd-(0,0)". Throws std::invalid_argument for unknown targets.
ConstraintSet ConstraintSetFor(const GameFamily& family,
                               const std::string& target);

// Resolves a full constraint name such as "sh-mixed" against `family`.
// Throws std::invalid_argument if the prefix does not match the family or
// the target is unknown.
ConstraintSet ConstraintSetByName(const GameFamily& family,
                                  const std::string& name);

// A coin profile satisfying the coin-level condition behind `target`, with
// the unconstrained coins set to `free_value`.
CoinProfile ClassicalCoinsFor(const GameFamily& family,
                              const std::string& target,
                              double free_value = 0.5);

struct Candidate {
  std::string name;
  // Empty when the closed form divides by an entry at or below 1e-12.
  std::optional<StrategyProfile> profile;
  bool in_square = false;
};

// The five closed-form equilibrium candidates of the quantum stag hunt:
// "(0,0)", "(1,1)", "delta-ratio" (d2/d3, d2/d3), "p1-form" and
// "p13-form". Throws std::invalid_argument unless `family` is a stag hunt.
std::vector<Candidate> QuantumStagHuntCandidates(const GameFamily& family,
                                                 const JointBox& box);

}  // namespace eprgame

#endif  // EPRGAME_GAMES_CATALOG_H_
