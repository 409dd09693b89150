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

#include "eprgame/epr_game.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace eprgame {
namespace {

std::string ShortestDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string EqualityLabel(const std::array<double, 16>& coeffs, double rhs) {
  std::string label;
  for (int k = 1; k <= 16; ++k) {
    const double c = coeffs[k - 1];
    if (c == 0) continue;
    if (c < 0) {
      label += "-";
    } else if (!label.empty()) {
      label += "+";
    }
    if (std::abs(c) != 1) label += ShortestDouble(std::abs(c));
    label += "p" + std::to_string(k);
  }
  return label + "=" + ShortestDouble(rhs);
}

// Gain of a player's first setting over the second, in free-entry form.
double Bracket(double opponent, double d1, double d2, double d3,
               double slope_term, double own_term, double cross_term) {
  return 0.5 * (opponent * d3 * slope_term -
                (d3 * own_term + (d1 + d2) * cross_term));
}

}  // namespace

double LinearEquality::Residual(const JointBox& box) const {
  double lhs = 0;
  for (int k = 1; k <= 16; ++k) lhs += coeffs[k - 1] * box.p(k);
  return lhs - rhs;
}

LinearEquality MakeEquality(
    std::initializer_list<std::pair<int, double>> terms, double rhs) {
  LinearEquality eq;
  for (const auto& [k, c] : terms) {
    if (k < 1 || k > 16) {
      throw std::invalid_argument("probability index out of range: " +
                                  std::to_string(k));
    }
    eq.coeffs[k - 1] += c;
  }
  eq.rhs = rhs;
  eq.label = EqualityLabel(eq.coeffs, rhs);
  return eq;
}

LinearEquality SumEquals(std::initializer_list<int> indices, double rhs) {
  LinearEquality eq;
  for (int k : indices) {
    if (k < 1 || k > 16) {
      throw std::invalid_argument("probability index out of range: " +
                                  std::to_string(k));
    }
    eq.coeffs[k - 1] += 1;
  }
  eq.rhs = rhs;
  eq.label = EqualityLabel(eq.coeffs, rhs);
  return eq;
}

void ConstraintSet::Validate() const {
  for (const LinearEquality& eq : equalities) {
    bool nonzero = false;
    for (double c : eq.coeffs) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("non-finite coefficient in " + eq.label);
      }
      nonzero = nonzero || c != 0;
    }
    if (!std::isfinite(eq.rhs)) {
      throw std::invalid_argument("non-finite right-hand side in " + eq.label);
    }
    if (!nonzero) {
      throw std::invalid_argument("equality without coefficients in set " +
                                  label);
    }
  }
}

double ConstraintCheck::MaxAbsResidual() const {
  double worst = 0;
  for (double r : residuals) worst = std::max(worst, std::abs(r));
  return worst;
}

ConstraintCheck ConstraintSatisfied(const JointBox& box,
                                    const ConstraintSet& set, double tol) {
  ConstraintCheck check;
  check.label = set.label;
  check.satisfied = true;
  for (const LinearEquality& eq : set.equalities) {
    const double r = eq.Residual(box);
    check.residuals.push_back(r);
    if (std::abs(r) > tol) check.satisfied = false;
  }
  return check;
}

OmegaCoefficients ComputeOmega(const JointBox& box) {
  auto omega = [&box](int j) {
    return box.p(j) - box.p(j + 4) - box.p(j + 8) + box.p(j + 12);
  };
  return {omega(1), omega(2), omega(3), omega(4)};
}

BlockPayoffs EprBlockPayoffs(const PayoffMatrix& matrix, const JointBox& box) {
  matrix.Validate();
  BlockPayoffs out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::array<double, 4> q = box.Block(i + 1, j + 1);
      out.alice[i][j] =
          matrix.k * q[0] + matrix.l * q[1] + matrix.m * q[2] + matrix.n * q[3];
      out.bob[i][j] =
          matrix.k * q[0] + matrix.m * q[1] + matrix.l * q[2] + matrix.n * q[3];
    }
  }
  return out;
}

AnalysisReport Analyze(const PayoffMatrix& matrix, const JointBox& box,
                       const std::vector<ConstraintSet>& constraints,
                       double tol) {
  AnalysisReport report;
  report.blocks = EprBlockPayoffs(matrix, box);
  report.equilibria = EnumerateEquilibria(report.blocks);
  for (const StrategyProfile& p : report.equilibria.points) {
    report.point_payoffs.push_back(MixedPayoffs(report.blocks, p));
    report.point_weak.push_back(IsWeakEquilibrium(report.blocks, p));
  }
  for (const Segment& s : report.equilibria.segments) {
    report.segment_payoffs.push_back({MixedPayoffs(report.blocks, s.Start()),
                                      MixedPayoffs(report.blocks, s.End())});
  }
  const auto factors = Factorize(box, tol);
  report.factorizable = std::holds_alternative<CoinProfile>(factors);
  report.factorization_residual =
      report.factorizable ? 0.0
                          : std::get<NotFactorizable>(factors).max_residual;
  report.ch = MaxChViolation(box);
  report.chsh = ChshCorrelationSum(box);
  report.chsh_max = MaxChshCorrelationSum(box);
  for (const ConstraintSet& set : constraints) {
    report.constraints.push_back(ConstraintSatisfied(box, set, tol));
  }
  return report;
}

NashResiduals NashInequalityResiduals(const PayoffMatrix& matrix,
                                      const JointBox& box,
                                      const StrategyProfile& profile) {
  matrix.Validate();
  profile.Validate();
  const FreeBlock f = ExtractFreeBlock(box);
  const double p1 = f.p(1), p4 = f.p(4), p5 = f.p(5), p8 = f.p(8),
               p9 = f.p(9), p12 = f.p(12), p14 = f.p(14), p15 = f.p(15);
  const double d1 = matrix.m - matrix.k;
  const double d2 = matrix.n - matrix.l;
  const double d3 = d2 - d1;
  const double slope = 1 + p1 + p4 - p5 - p8 - p9 - p12 - p14 - p15;

  const double alice_gain = Bracket(profile.y, d1, d2, d3, slope,
                                    1 - p5 - p8 - p14 - p15,
                                    p1 - p4 - p9 + p12);
  const double bob_gain = Bracket(profile.x, d1, d2, d3, slope,
                                  1 - p9 - p12 - p14 - p15,
                                  p1 - p4 - p5 + p8);
  // Pi(x*) - Pi(x) = (x* - x) * gain; the worst pure deviation is whichever
  // of x = 0, 1 makes this smaller.
  auto worst = [](double star, double gain) {
    return std::min(star * gain, (star - 1) * gain);
  };
  return {worst(profile.x, alice_gain), worst(profile.y, bob_gain)};
}

}  // namespace eprgame
