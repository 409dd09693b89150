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

#ifndef EPRGAME_EPR_GAME_H_
#define EPRGAME_EPR_GAME_H_

#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "eprgame/game_core.h"
#include "eprgame/probability_box.h"

namespace eprgame {

// sum_k coeffs[k-1] * p_k = rhs.
struct LinearEquality {
  std::array<double, 16> coeffs{};
  double rhs = 0;
  std::string label;

  double Residual(const JointBox& box) const;
};

// Builds an equality from (k, coefficient) terms and labels it
// "p5+p7=0", "2p2-3p5=0" and so on.
LinearEquality MakeEquality(
    std::initializer_list<std::pair<int, double>> terms, double rhs);

// Shorthand for p_{k1} + p_{k2} + ... = rhs.
LinearEquality SumEquals(std::initializer_list<int> indices, double rhs);

struct ConstraintSet {
  std::string label;
  std::vector<LinearEquality> equalities;

  // Throws std::invalid_argument if a coefficient is not finite or an
  // equality has no nonzero coefficient.
  void Validate() const;
};

struct ConstraintCheck {
  std::string label;
  bool satisfied = false;
  std::vector<double> residuals;  // signed, one per equality

  double MaxAbsResidual() const;
};

ConstraintCheck ConstraintSatisfied(const JointBox& box,
                                    const ConstraintSet& set,
                                    double tol = kUserTolerance);

struct OmegaCoefficients {
  double omega1 = 0;
  double omega2 = 0;
  double omega3 = 0;
  double omega4 = 0;

  double Sum() const { return omega1 + omega2 + omega3 + omega4; }
};

// Omega_j = p_j - p_{j+4} - p_{j+8} + p_{j+12}.
OmegaCoefficients ComputeOmega(const JointBox& box);

// Alice at (S_a, S_b'): K p(+,+) + L p(+,-) + M p(-,+) + N p(-,-) on that
// block; Bob the same with L and M exchanged.
BlockPayoffs EprBlockPayoffs(const PayoffMatrix& matrix, const JointBox& box);

struct SegmentPayoffs {
  PayoffPair start;
  PayoffPair end;
};

struct AnalysisReport {
  BlockPayoffs blocks;
  EquilibriumSet equilibria;
  std::vector<PayoffPair> point_payoffs;        // parallel to points
  std::vector<SegmentPayoffs> segment_payoffs;  // parallel to segments
  std::vector<bool> point_weak;                 // parallel to points
  bool factorizable = false;
  double factorization_residual = 0;
  ChExtremes ch;
  double chsh = 0;      // default sign pattern
  double chsh_max = 0;  // best admissible sign pattern
  std::vector<ConstraintCheck> constraints;
};

AnalysisReport Analyze(const PayoffMatrix& matrix, const JointBox& box,
                       const std::vector<ConstraintSet>& constraints = {},
                       double tol = kUserTolerance);

struct NashResiduals {
  double alice = 0;
  double bob = 0;

  bool IsEquilibrium(double tol = 0) const {
    return alice >= -tol && bob >= -tol;
  }
};

// Minimum over pure deviations of Pi(x*, y*) - Pi(deviation), evaluated in
// the free-entry form of the deviation terms rather than through the block
// payoffs. Nonnegative for both players exactly at weak equilibria.
NashResiduals NashInequalityResiduals(const PayoffMatrix& matrix,
                                      const JointBox& box,
                                      const StrategyProfile& profile);

}  // namespace eprgame

#endif  // EPRGAME_EPR_GAME_H_
