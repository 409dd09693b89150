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

#include "eprgame/search.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eprgame/philox.h"
#include "parallel.h"

namespace eprgame {
namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kConsistencyTolerance = 1e-9;
constexpr double kRangeSlack = 1e-12;
constexpr double kHullThreshold = 1e-9;

using Vector8 = Eigen::Matrix<double, 8, 1>;

// Orthogonal projection onto an affine subspace: mu0 + N N^T (mu - mu0).
struct AffineProjector {
  Vector8 origin = Vector8::Zero();
  Eigen::MatrixXd null_basis = Eigen::MatrixXd::Identity(8, 8);

  Vector8 Project(const Vector8& mu) const {
    return origin + null_basis * (null_basis.transpose() * (mu - origin));
  }
};

// p = A mu + c for the completion map.
void CompletionMap(Eigen::Matrix<double, 16, 8>* a,
                   Eigen::Matrix<double, 16, 1>* c) {
  FreeBlock zero;
  const auto base = CompleteFromFreeUnchecked(zero);
  for (int k = 0; k < 16; ++k) (*c)(k) = base[k];
  for (int j = 0; j < 8; ++j) {
    FreeBlock unit;
    unit.values[j] = 1;
    const auto p = CompleteFromFreeUnchecked(unit);
    for (int k = 0; k < 16; ++k) (*a)(k, j) = p[k] - base[k];
  }
}

// Calls fn(subset) for every size-d subset of {0..15}.
template <typename Fn>
void ForEachSubset(int d, Fn fn) {
  std::vector<int> subset(d);
  for (int i = 0; i < d; ++i) subset[i] = i;
  while (true) {
    fn(subset);
    int i = d - 1;
    while (i >= 0 && subset[i] == 16 - d + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// The declared equalities can force further entries to zero through
// positivity alone (p5 + p6 = 0 forces p5 = p6 = 0), which leaves the
// feasible boxes on a face of lower dimension than the declared subspace.
// Draws are therefore projected onto the affine hull of that face, spanned
// by its vertices: the basic feasible solutions of G mu = h, p(mu) >= 0.
AffineProjector BuildProjector(const ConstraintSet& set) {
  set.Validate();
  Eigen::Matrix<double, 16, 8> a;
  Eigen::Matrix<double, 16, 1> c;
  CompletionMap(&a, &c);
  const int rows = static_cast<int>(set.equalities.size());
  Eigen::MatrixXd g(rows, 8);
  Eigen::VectorXd h(rows);
  for (int i = 0; i < rows; ++i) {
    const LinearEquality& eq = set.equalities[i];
    Eigen::Matrix<double, 1, 16> coeffs;
    for (int k = 0; k < 16; ++k) coeffs(k) = eq.coeffs[k];
    g.row(i) = coeffs * a;
    h(i) = eq.rhs - coeffs.dot(c.col(0));
  }

  AffineProjector projector;
  if (rows == 0) return projector;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(kRankThreshold);
  const Vector8 particular = svd.solve(h);
  if ((g * particular - h).norm() > kConsistencyTolerance) {
    throw std::invalid_argument("constraint set " + set.label +
                                " is inconsistent with no-signaling");
  }
  const int rank = static_cast<int>(svd.rank());

  std::vector<Vector8> vertices;
  const int active = 8 - rank;
  ForEachSubset(active, [&](const std::vector<int>& zeros) {
    Eigen::MatrixXd lhs(rows + active, 8);
    Eigen::VectorXd rhs(rows + active);
    lhs.topRows(rows) = g;
    rhs.head(rows) = h;
    for (int i = 0; i < active; ++i) {
      lhs.row(rows + i) = a.row(zeros[i]);
      rhs(rows + i) = -c(zeros[i]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> solver(
        lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
    solver.setThreshold(kRankThreshold);
    if (solver.rank() < 8) return;
    const Vector8 mu = solver.solve(rhs);
    if ((lhs * mu - rhs).norm() > kConsistencyTolerance) return;
    const Eigen::Matrix<double, 16, 1> p = a * mu + c;
    if (p.minCoeff() < -kConsistencyTolerance) return;
    vertices.push_back(mu);
  });
  if (vertices.empty()) {
    throw std::invalid_argument("constraint set " + set.label +
                                " admits no valid box");
  }

  projector.origin = vertices.front();
  Eigen::MatrixXd spread(8, vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    spread.col(i) = vertices[i] - projector.origin;
  }
  // Vertex coordinates are O(1), so an absolute cut separates true
  // directions from rounding noise.
  Eigen::JacobiSVD<Eigen::MatrixXd> hull(spread, Eigen::ComputeFullU);
  int dimension = 0;
  while (dimension < hull.singularValues().size() &&
         hull.singularValues()(dimension) > kHullThreshold) {
    ++dimension;
  }
  projector.null_basis = hull.matrixU().leftCols(dimension);
  return projector;
}

Vector8 DrawFree(uint64_t seed, uint64_t attempt) {
  const auto w0 = Philox4x64::Block({attempt, 1, 0, 0}, {seed, 0});
  const auto w1 = Philox4x64::Block({attempt, 1, 1, 0}, {seed, 0});
  Vector8 mu;
  for (int i = 0; i < 4; ++i) {
    mu(i) = Philox4x64::ToUnit(w0[i]);
    mu(i + 4) = Philox4x64::ToUnit(w1[i]);
  }
  return mu;
}

std::string Describe(const EquilibriumSet& set) { return set.ToString(); }

}  // namespace

SampleResult SampleBoxes(uint64_t samples, uint64_t seed,
                         const std::optional<ConstraintSet>& constraint,
                         const std::vector<JointBox>& inject) {
  SampleResult result;
  result.boxes = inject;
  result.stats.injected = inject.size();
  AffineProjector projector;
  if (constraint) projector = BuildProjector(*constraint);
  result.stats.free_dimension = static_cast<int>(projector.null_basis.cols());

  uint64_t rejected_in_a_row = 0;
  for (uint64_t attempt = 0; result.stats.accepted < samples; ++attempt) {
    if (rejected_in_a_row >= kMaxRejectedAttempts) {
      throw std::runtime_error(
          "no valid box after " + std::to_string(kMaxRejectedAttempts) +
          " attempts for constraint set " +
          (constraint ? constraint->label : std::string("(none)")));
    }
    ++result.stats.attempts;
    const Vector8 mu = projector.Project(DrawFree(seed, attempt));
    FreeBlock free;
    bool in_range = true;
    for (int i = 0; i < 8; ++i) {
      if (mu(i) < -kRangeSlack || mu(i) > 1 + kRangeSlack) in_range = false;
      free.values[i] = std::clamp(mu(i), 0.0, 1.0);
    }
    if (!in_range) {
      ++rejected_in_a_row;
      continue;
    }
    auto completed = CompleteFromFree(free, kRangeSlack);
    if (!std::holds_alternative<JointBox>(completed)) {
      ++rejected_in_a_row;
      continue;
    }
    rejected_in_a_row = 0;
    ++result.stats.accepted;
    result.boxes.push_back(std::get<JointBox>(completed));
  }
  return result;
}

std::string DescribeDifference(const EquilibriumSet& reference,
                               const EquilibriumSet& found, double tol) {
  std::vector<std::string> missing;
  for (const StrategyProfile& p : reference.points) {
    if (!found.Contains(p, tol)) {
      missing.push_back(Describe(EquilibriumSet{{p}, {}, false}));
    }
  }
  std::vector<std::string> added;
  if (found.entire_square) {
    added.push_back(Describe(found));
  } else {
    for (const StrategyProfile& p : found.points) {
      if (!reference.Contains(p, tol)) {
        added.push_back(Describe(EquilibriumSet{{p}, {}, false}));
      }
    }
    for (const Segment& s : found.segments) {
      const EquilibriumSet single{{}, {s}, false};
      if (DirectedHausdorffDistance(single, reference) > tol) {
        added.push_back(Describe(single));
      }
    }
  }
  std::string out;
  auto append = [&out](const std::string& title,
                       const std::vector<std::string>& items) {
    if (items.empty()) return;
    if (!out.empty()) out += "; ";
    out += title;
    for (size_t i = 0; i < items.size(); ++i) {
      out += (i == 0 ? " " : ", ") + items[i];
    }
  };
  append("missing", missing);
  append("new", added);
  return out;
}

SearchResult ScanForNewEquilibria(const SearchConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("samples must be positive");
  }
  const SampleResult sampled = SampleBoxes(config.samples, config.seed,
                                           config.constraint, config.inject);
  const EquilibriumSet classical = ClassicalEquilibriumSet(config.family);
  const PayoffMatrix& matrix = config.family.matrix();

  const size_t n = sampled.boxes.size();
  std::vector<std::optional<SearchHit>> slots(n);
  internal::ParallelFor(n, config.workers, [&](size_t i) {
    const JointBox& box = sampled.boxes[i];
    const EquilibriumSet equilibria =
        EnumerateEquilibria(EprBlockPayoffs(matrix, box));
    const double distance = HausdorffDistance(classical, equilibria);
    if (distance <= config.tol) return;
    SearchHit hit{i, box, equilibria, distance,
                  DescribeDifference(classical, equilibria, config.tol)};
    if (hit.classical_diff.empty()) {
      hit.classical_diff = "equilibria differ from " + classical.ToString();
    }
    hit.factorizable =
        std::holds_alternative<CoinProfile>(Factorize(box, kUserTolerance));
    hit.chsh = ChshCorrelationSum(box);
    slots[i] = std::move(hit);
  });

  SearchResult result;
  result.stats = sampled.stats;
  result.scanned = n;
  for (auto& slot : slots) {
    if (slot) result.hits.push_back(std::move(*slot));
  }
  return result;
}

}  // namespace eprgame
