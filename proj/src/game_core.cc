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

#include "eprgame/game_core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace eprgame {
namespace {

// Coordinates closer than this are treated as the same point when the
// equilibrium set is put in canonical form.
constexpr double kMergeTolerance = 1e-12;

// Axis-aligned closed box in the unit square. Degenerate boxes represent
// points and segments.
struct Box {
  double x_lo, x_hi, y_lo, y_hi;

  bool IsPointX() const { return x_hi - x_lo <= kMergeTolerance; }
  bool IsPointY() const { return y_hi - y_lo <= kMergeTolerance; }
};

double DistanceToBox(const Box& b, double x, double y) {
  double dx = std::max({b.x_lo - x, 0.0, x - b.x_hi});
  double dy = std::max({b.y_lo - y, 0.0, y - b.y_hi});
  return std::hypot(dx, dy);
}

int SignWithTolerance(double v, double tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

// Graph of one player's best response as a union of boxes in (own, other)
// coordinates: for every value t of the opponent's mixing probability, the
// set of own probabilities that are best responses. `gain_at_0`/`gain_at_1`
// are the player's gains when the opponent plays t = 0 and t = 1.
std::vector<Box> BestResponsePieces(double gain_at_0, double gain_at_1,
                                    double tie_tol) {
  const int s0 = SignWithTolerance(gain_at_0, tie_tol);
  const int s1 = SignWithTolerance(gain_at_1, tie_tol);
  std::vector<Box> pieces;
  if (s0 == 0 && s1 == 0) {
    pieces.push_back({0, 1, 0, 1});
    return pieces;
  }
  if (s0 >= 0 && s1 >= 0) {
    pieces.push_back({1, 1, 0, 1});
  } else if (s0 <= 0 && s1 <= 0) {
    pieces.push_back({0, 0, 0, 1});
  } else {
    double root = gain_at_0 / (gain_at_0 - gain_at_1);
    root = std::clamp(root, 0.0, 1.0);
    double below = s0 > 0 ? 1.0 : 0.0;
    pieces.push_back({below, below, 0, root});
    pieces.push_back({1 - below, 1 - below, root, 1});
    pieces.push_back({0, 1, root, root});
    return pieces;
  }
  if (s0 == 0) pieces.push_back({0, 1, 0, 0});
  if (s1 == 0) pieces.push_back({0, 1, 1, 1});
  return pieces;
}

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= kMergeTolerance;
}

bool ProfileLess(const StrategyProfile& a, const StrategyProfile& b) {
  if (!NearlyEqual(a.x, b.x)) return a.x < b.x;
  if (!NearlyEqual(a.y, b.y)) return a.y < b.y;
  return false;
}

Box SegmentBox(const Segment& s) {
  if (s.free_axis == FreeAxis::kX) return {s.lo, s.hi, s.fixed, s.fixed};
  return {s.fixed, s.fixed, s.lo, s.hi};
}

std::vector<Box> Elements(const EquilibriumSet& set) {
  std::vector<Box> boxes;
  if (set.entire_square) {
    boxes.push_back({0, 1, 0, 1});
    return boxes;
  }
  for (const StrategyProfile& p : set.points) {
    boxes.push_back({p.x, p.x, p.y, p.y});
  }
  for (const Segment& s : set.segments) boxes.push_back(SegmentBox(s));
  return boxes;
}

double DistanceToElements(const std::vector<Box>& elements, double x,
                          double y) {
  double best = std::numeric_limits<double>::infinity();
  for (const Box& b : elements) best = std::min(best, DistanceToBox(b, x, y));
  return best;
}

// Upper bound on the distance to `target` over box `b`. Distance to a convex
// element is convex, so over `b` it peaks at a corner.
double UpperBound(const Box& b, const std::vector<Box>& target) {
  double bound = std::numeric_limits<double>::infinity();
  for (const Box& e : target) {
    double worst = 0;
    for (double x : {b.x_lo, b.x_hi}) {
      for (double y : {b.y_lo, b.y_hi}) {
        worst = std::max(worst, DistanceToBox(e, x, y));
      }
    }
    bound = std::min(bound, worst);
  }
  return bound;
}

// sup over `region` of the distance to `target`, by Lipschitz branch and
// bound (the distance function is 1-Lipschitz).
double SupDistance(const Box& region, const std::vector<Box>& target,
                   double precision) {
  std::vector<Box> stack = {region};
  double best = 0;
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    double cx = 0.5 * (b.x_lo + b.x_hi);
    double cy = 0.5 * (b.y_lo + b.y_hi);
    double value = DistanceToElements(target, cx, cy);
    best = std::max(best, value);
    double half_diag = 0.5 * std::hypot(b.x_hi - b.x_lo, b.y_hi - b.y_lo);
    const double bound = std::min(value + half_diag, UpperBound(b, target));
    if (bound <= best + precision) continue;
    if (b.x_hi - b.x_lo >= b.y_hi - b.y_lo) {
      stack.push_back({b.x_lo, cx, b.y_lo, b.y_hi});
      stack.push_back({cx, b.x_hi, b.y_lo, b.y_hi});
    } else {
      stack.push_back({b.x_lo, b.x_hi, b.y_lo, cy});
      stack.push_back({b.x_lo, b.x_hi, cy, b.y_hi});
    }
  }
  return best;
}

double DirectedHausdorff(const std::vector<Box>& from,
                         const std::vector<Box>& to, double precision) {
  double result = 0;
  for (const Box& b : from) {
    result = std::max(result, SupDistance(b, to, precision));
  }
  return result;
}

// Puts raw intersection boxes into the canonical EquilibriumSet form.
EquilibriumSet Canonicalize(const std::vector<Box>& raw) {
  EquilibriumSet set;
  std::vector<StrategyProfile> points;
  std::vector<Segment> segments;
  for (const Box& b : raw) {
    const bool px = b.IsPointX();
    const bool py = b.IsPointY();
    if (px && py) {
      points.push_back({b.x_lo, b.y_lo});
    } else if (py) {
      segments.push_back({FreeAxis::kX, b.y_lo, b.x_lo, b.x_hi});
    } else if (px) {
      segments.push_back({FreeAxis::kY, b.x_lo, b.y_lo, b.y_hi});
    } else {
      set.entire_square = true;
      return set;
    }
  }

  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) {
              if (a.free_axis != b.free_axis) return a.free_axis < b.free_axis;
              if (!NearlyEqual(a.fixed, b.fixed)) return a.fixed < b.fixed;
              return a.lo < b.lo;
            });
  for (const Segment& s : segments) {
    if (!set.segments.empty()) {
      Segment& last = set.segments.back();
      if (last.free_axis == s.free_axis && NearlyEqual(last.fixed, s.fixed) &&
          s.lo <= last.hi + kMergeTolerance) {
        last.hi = std::max(last.hi, s.hi);
        continue;
      }
    }
    set.segments.push_back(s);
  }

  std::vector<Box> segment_boxes;
  for (const Segment& s : set.segments) segment_boxes.push_back(SegmentBox(s));
  std::sort(points.begin(), points.end(), ProfileLess);
  for (const StrategyProfile& p : points) {
    if (!set.points.empty() && !ProfileLess(set.points.back(), p)) continue;
    if (!segment_boxes.empty() &&
        DistanceToElements(segment_boxes, p.x, p.y) <= kMergeTolerance) {
      continue;
    }
    set.points.push_back(p);
  }
  return set;
}

std::string FormatNumber(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace

void PayoffMatrix::Validate() const {
  for (double v : {k, l, m, n}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("payoff matrix entries must be finite");
    }
  }
}

double PayoffMatrix::Min() const { return std::min({k, l, m, n}); }
double PayoffMatrix::Max() const { return std::max({k, l, m, n}); }

void StrategyProfile::Validate() const {
  if (!(x >= 0 && x <= 1 && y >= 0 && y <= 1)) {
    throw std::invalid_argument("strategy profile must lie in [0,1]^2");
  }
}

StrategyProfile Segment::Start() const {
  return free_axis == FreeAxis::kX ? StrategyProfile{lo, fixed}
                                   : StrategyProfile{fixed, lo};
}

StrategyProfile Segment::End() const {
  return free_axis == FreeAxis::kX ? StrategyProfile{hi, fixed}
                                   : StrategyProfile{fixed, hi};
}

double EquilibriumSet::DistanceTo(const StrategyProfile& p) const {
  return DistanceToElements(Elements(*this), p.x, p.y);
}

bool EquilibriumSet::Contains(const StrategyProfile& p, double tol) const {
  return DistanceTo(p) <= tol;
}

std::vector<StrategyProfile> EquilibriumSet::PureProfiles(double tol) const {
  std::vector<StrategyProfile> corners;
  for (double x : {0.0, 1.0}) {
    for (double y : {0.0, 1.0}) {
      if (Contains({x, y}, tol)) corners.push_back({x, y});
    }
  }
  return corners;
}

std::string EquilibriumSet::ToString() const {
  if (entire_square) return "{[0,1]x[0,1]}";
  std::string out = "{";
  bool first = true;
  for (const StrategyProfile& p : points) {
    if (!first) out += ", ";
    first = false;
    out += "(" + FormatNumber(p.x) + "," + FormatNumber(p.y) + ")";
  }
  for (const Segment& s : segments) {
    if (!first) out += ", ";
    first = false;
    std::string range = "[" + FormatNumber(s.lo) + "," + FormatNumber(s.hi) + "]";
    if (s.free_axis == FreeAxis::kX) {
      out += "(" + range + "," + FormatNumber(s.fixed) + ")";
    } else {
      out += "(" + FormatNumber(s.fixed) + "," + range + ")";
    }
  }
  return out + "}";
}

double HausdorffDistance(const EquilibriumSet& a, const EquilibriumSet& b,
                         double precision) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  std::vector<Box> ea = Elements(a);
  std::vector<Box> eb = Elements(b);
  return std::max(DirectedHausdorff(ea, eb, precision),
                  DirectedHausdorff(eb, ea, precision));
}

double DirectedHausdorffDistance(const EquilibriumSet& from,
                                 const EquilibriumSet& to, double precision) {
  if (from.empty()) return 0;
  if (to.empty()) return std::numeric_limits<double>::infinity();
  return DirectedHausdorff(Elements(from), Elements(to), precision);
}

PayoffPair TwoCoinPayoff(const PayoffMatrix& matrix,
                         const StrategyProfile& profile) {
  const double x = profile.x;
  const double y = profile.y;
  const double xy = x * y;
  const double xny = x * (1 - y);
  const double nxy = (1 - x) * y;
  const double nxny = (1 - x) * (1 - y);
  return {xy * matrix.k + xny * matrix.l + nxy * matrix.m + nxny * matrix.n,
          xy * matrix.k + xny * matrix.m + nxy * matrix.l + nxny * matrix.n};
}

BlockPayoffs ClassicalBlockPayoffs(const PayoffMatrix& matrix) {
  BlockPayoffs blocks;
  blocks.alice = {{{matrix.k, matrix.l}, {matrix.m, matrix.n}}};
  blocks.bob = {{{matrix.k, matrix.m}, {matrix.l, matrix.n}}};
  return blocks;
}

PayoffPair MixedPayoffs(const BlockPayoffs& blocks,
                        const StrategyProfile& profile) {
  const std::array<double, 2> u = {profile.x, 1 - profile.x};
  const std::array<double, 2> v = {profile.y, 1 - profile.y};
  PayoffPair out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double w = u[i] * v[j];
      out.alice += w * blocks.alice[i][j];
      out.bob += w * blocks.bob[i][j];
    }
  }
  return out;
}

double AliceGain(const BlockPayoffs& blocks, double y) {
  const auto& a = blocks.alice;
  return y * (a[0][0] - a[1][0]) + (1 - y) * (a[0][1] - a[1][1]);
}

double BobGain(const BlockPayoffs& blocks, double x) {
  const auto& b = blocks.bob;
  return x * (b[0][0] - b[0][1]) + (1 - x) * (b[1][0] - b[1][1]);
}

EquilibriumSet EnumerateEquilibria(const BlockPayoffs& blocks,
                                   double tie_tol) {
  // Alice's pieces come out in (x, y) order directly; Bob's are built in
  // (y, x) order and transposed.
  std::vector<Box> alice = BestResponsePieces(AliceGain(blocks, 0),
                                              AliceGain(blocks, 1), tie_tol);
  std::vector<Box> bob;
  for (const Box& b : BestResponsePieces(BobGain(blocks, 0),
                                         BobGain(blocks, 1), tie_tol)) {
    bob.push_back({b.y_lo, b.y_hi, b.x_lo, b.x_hi});
  }

  std::vector<Box> raw;
  for (const Box& a : alice) {
    for (const Box& b : bob) {
      Box c{std::max(a.x_lo, b.x_lo), std::min(a.x_hi, b.x_hi),
            std::max(a.y_lo, b.y_lo), std::min(a.y_hi, b.y_hi)};
      if (c.x_lo <= c.x_hi && c.y_lo <= c.y_hi) raw.push_back(c);
    }
  }
  return Canonicalize(raw);
}

bool IsEquilibrium(const BlockPayoffs& blocks, const StrategyProfile& profile,
                   double tol) {
  const PayoffPair at = MixedPayoffs(blocks, profile);
  for (double dev : {0.0, 1.0}) {
    if (MixedPayoffs(blocks, {dev, profile.y}).alice > at.alice + tol) {
      return false;
    }
    if (MixedPayoffs(blocks, {profile.x, dev}).bob > at.bob + tol) {
      return false;
    }
  }
  return true;
}

bool IsWeakEquilibrium(const BlockPayoffs& blocks,
                       const StrategyProfile& profile, double tie_tol) {
  const bool alice_pure = profile.x == 0 || profile.x == 1;
  const bool bob_pure = profile.y == 0 || profile.y == 1;
  return (alice_pure &&
          std::abs(AliceGain(blocks, profile.y)) <= tie_tol) ||
         (bob_pure && std::abs(BobGain(blocks, profile.x)) <= tie_tol);
}

}  // namespace eprgame
