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

#ifndef EPRGAME_GAME_CORE_H_
#define EPRGAME_GAME_CORE_H_

#include <array>
#include <string>
#include <vector>

namespace eprgame {

// Default absolute tolerance used to decide the sign of a best-response gain.
inline constexpr double kTieTolerance = 1e-12;

// Payoffs of a symmetric 2x2 game, Alice's view:
//
//            Bob X1'  Bob X2'
//   Alice X1    K        L
//   Alice X2    M        N
//
// Bob's matrix is the transpose, i.e. the same table with L and M exchanged.
// It is derived on demand and never stored.
struct PayoffMatrix {
  double k = 0;
  double l = 0;
  double m = 0;
  double n = 0;

  // Throws std::invalid_argument if any entry is not finite.
  void Validate() const;
  double Min() const;
  double Max() const;
};

// Mixed strategies: x is the probability that Alice plays her first
// strategy, y the probability that Bob plays his.
struct StrategyProfile {
  double x = 0;
  double y = 0;

  // Throws std::invalid_argument unless both lie in [0, 1].
  void Validate() const;
};

struct PayoffPair {
  double alice = 0;
  double bob = 0;
};

// Payoffs at the four pure setting pairs. alice[i][j] is Alice's payoff when
// she plays strategy i and Bob plays strategy j (0 = first, 1 = second);
// bob[i][j] is Bob's payoff at the same pair.
struct BlockPayoffs {
  using Table = std::array<std::array<double, 2>, 2>;
  Table alice{};
  Table bob{};
};

enum class FreeAxis { kX, kY };

// A closed axis-aligned segment of equilibria: the coordinate named by
// `free_axis` ranges over [lo, hi] while the other one is held at `fixed`.
struct Segment {
  FreeAxis free_axis = FreeAxis::kX;
  double fixed = 0;
  double lo = 0;
  double hi = 0;

  StrategyProfile Start() const;
  StrategyProfile End() const;
  double Length() const { return hi - lo; }
};

// The complete set of weak Nash equilibria of a bilinear 2x2 game, in
// canonical form: isolated points sorted lexicographically, maximal merged
// segments, and no point lying on a listed segment. When `entire_square` is
// set every profile is an equilibrium and the lists are empty.
struct EquilibriumSet {
  std::vector<StrategyProfile> points;
  std::vector<Segment> segments;
  bool entire_square = false;

  bool empty() const {
    return points.empty() && segments.empty() && !entire_square;
  }
  // Euclidean distance from `p` to the set.
  double DistanceTo(const StrategyProfile& p) const;
  // True if `p` lies within `tol` of the set.
  bool Contains(const StrategyProfile& p, double tol = 1e-9) const;
  // Pure-strategy profiles (corners of the unit square) contained in the set.
  std::vector<StrategyProfile> PureProfiles(double tol = 1e-9) const;
  std::string ToString() const;
};

// Symmetric Hausdorff distance between two equilibrium sets, accurate to
// roughly `precision`.
double HausdorffDistance(const EquilibriumSet& a, const EquilibriumSet& b,
                         double precision = 1e-10);

// sup over p in `from` of the distance from p to `to`.
double DirectedHausdorffDistance(const EquilibriumSet& from,
                                 const EquilibriumSet& to,
                                 double precision = 1e-10);

// The two-coin game: payoffs of the bilinear form
// (x, 1-x) [(K,K) (L,M); (M,L) (N,N)] (y, 1-y)^T.
PayoffPair TwoCoinPayoff(const PayoffMatrix& matrix,
                         const StrategyProfile& profile);

// Block payoffs of the two-coin game: alice = [[K,L],[M,N]],
// bob = [[K,M],[L,N]].
BlockPayoffs ClassicalBlockPayoffs(const PayoffMatrix& matrix);

// (x, 1-x) . table . (y, 1-y)^T for each player.
PayoffPair MixedPayoffs(const BlockPayoffs& blocks,
                        const StrategyProfile& profile);

// Alice's gain from her first strategy over her second when Bob mixes with
// y, and Bob's gain from his first strategy when Alice mixes with x. Both are
// affine in their argument.
double AliceGain(const BlockPayoffs& blocks, double y);
double BobGain(const BlockPayoffs& blocks, double x);

// Solves the weak Nash inequalities exactly by intersecting the two
// best-response correspondences. Gains with |gain| <= tie_tol count as ties.
EquilibriumSet EnumerateEquilibria(const BlockPayoffs& blocks,
                                   double tie_tol = kTieTolerance);

// Deviation check against the pure strategies: true iff neither player can
// gain more than `tol` by switching to x in {0,1} (resp. y in {0,1}).
// Corner deviations suffice because payoffs are bilinear.
bool IsEquilibrium(const BlockPayoffs& blocks, const StrategyProfile& profile,
                   double tol = 0.0);

// True when a player who plays a pure strategy at `profile` is indifferent
// between their two pure strategies, so the equilibrium holds only weakly
// (the deviation gain vanishes). Interior mixing is indifferent by
// construction and is not flagged.
bool IsWeakEquilibrium(const BlockPayoffs& blocks,
                       const StrategyProfile& profile,
                       double tie_tol = kTieTolerance);

}  // namespace eprgame

#endif  // EPRGAME_GAME_CORE_H_
