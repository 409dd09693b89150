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

#ifndef EPRGAME_TESTS_ORACLES_H_
#define EPRGAME_TESTS_ORACLES_H_

// Reference computations written directly from the definitions, without
// calling into the library. Tests compare library results against these.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "eprgame/game_core.h"

namespace eprgame::testing {

using Entries = std::array<double, 16>;

// 0-based position of Pr(alice_plus, bob_plus; a, b), a and b in {1, 2}.
inline int Pos(bool alice_plus, bool bob_plus, int a, int b) {
  return (bob_plus ? 0 : 1) + 2 * (alice_plus ? 0 : 1) + 4 * (b - 1) +
         8 * (a - 1);
}

inline double At(const Entries& p, bool ap, bool bp, int a, int b) {
  return p[Pos(ap, bp, a, b)];
}

// Payoffs of a bimatrix block game at a mixed profile, summed term by term.
inline PayoffPair OracleMixed(const BlockPayoffs& g, double x, double y) {
  const double wa[2] = {x, 1 - x};
  const double wb[2] = {y, 1 - y};
  PayoffPair out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.alice += wa[a] * wb[b] * g.alice[a][b];
      out.bob += wa[a] * wb[b] * g.bob[a][b];
    }
  }
  return out;
}

// min over players of (payoff at p) - (best pure deviation payoff). Nonnegative
// exactly at Nash equilibria.
inline double OracleDeviation(const BlockPayoffs& g, const StrategyProfile& p) {
  const PayoffPair here = OracleMixed(g, p.x, p.y);
  const double alice_best = std::max(OracleMixed(g, 1, p.y).alice,
                                     OracleMixed(g, 0, p.y).alice);
  const double bob_best =
      std::max(OracleMixed(g, p.x, 1).bob, OracleMixed(g, p.x, 0).bob);
  return std::min(here.alice - alice_best, here.bob - bob_best);
}

// The box of four independent coins with head probabilities r (S1), s (S2),
// rp (S1'), sp (S2').
inline Entries OracleCoins(double r, double s, double rp, double sp) {
  const double alice[2] = {r, s};
  const double bob[2] = {rp, sp};
  Entries p{};
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (bool ap : {true, false}) {
        for (bool bp : {true, false}) {
          const double pa = ap ? alice[a - 1] : 1 - alice[a - 1];
          const double pb = bp ? bob[b - 1] : 1 - bob[b - 1];
          p[Pos(ap, bp, a, b)] = pa * pb;
        }
      }
    }
  }
  return p;
}

// The box whose outcomes agree except at (S2, S2'), where they disagree.
inline Entries OraclePr() {
  Entries p{};
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const bool anti = (a == 2 && b == 2);
      for (bool ap : {true, false}) {
        for (bool bp : {true, false}) {
          p[Pos(ap, bp, a, b)] = ((ap == bp) != anti) ? 0.5 : 0.0;
        }
      }
    }
  }
  return p;
}

// w * PR + (1 - w) * (random product box). Always no-signaling.
template <typename Rng>
Entries OracleRandomBox(Rng& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  const double w = u(rng);
  const Entries coins = OracleCoins(u(rng), u(rng), u(rng), u(rng));
  const Entries pr = OraclePr();
  Entries p{};
  for (int k = 0; k < 16; ++k) p[k] = w * pr[k] + (1 - w) * coins[k];
  return p;
}

// Expected payoffs when Alice plays S1 with probability x and Bob plays S1'
// with probability y, from the payoff matrix and the 16 entries.
inline PayoffPair OracleEprPayoff(const PayoffMatrix& m, const Entries& p,
                                  double x, double y) {
  const double wa[2] = {x, 1 - x};
  const double wb[2] = {y, 1 - y};
  PayoffPair out;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const double w = wa[a - 1] * wb[b - 1];
      const double pp = At(p, true, true, a, b);
      const double pm = At(p, true, false, a, b);
      const double mp = At(p, false, true, a, b);
      const double mm = At(p, false, false, a, b);
      out.alice += w * (m.k * pp + m.l * pm + m.m * mp + m.n * mm);
      out.bob += w * (m.k * pp + m.m * pm + m.l * mp + m.n * mm);
    }
  }
  return out;
}

inline double OracleCorrelator(const Entries& p, int a, int b) {
  return At(p, true, true, a, b) + At(p, false, false, a, b) -
         At(p, true, false, a, b) - At(p, false, true, a, b);
}

// E11 + E12 + E21 - E22.
inline double OracleChsh(const Entries& p) {
  return OracleCorrelator(p, 1, 1) + OracleCorrelator(p, 1, 2) +
         OracleCorrelator(p, 2, 1) - OracleCorrelator(p, 2, 2);
}

// Largest violation of normalization or of either party's marginal being
// independent of the other party's setting.
inline double OracleSignaling(const Entries& p) {
  double worst = 0;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      double total = 0;
      for (bool ap : {true, false}) {
        for (bool bp : {true, false}) total += At(p, ap, bp, a, b);
      }
      worst = std::max(worst, std::abs(total - 1));
    }
  }
  for (int a = 1; a <= 2; ++a) {
    const double m1 = At(p, true, true, a, 1) + At(p, true, false, a, 1);
    const double m2 = At(p, true, true, a, 2) + At(p, true, false, a, 2);
    worst = std::max(worst, std::abs(m1 - m2));
  }
  for (int b = 1; b <= 2; ++b) {
    const double m1 = At(p, true, true, 1, b) + At(p, false, true, 1, b);
    const double m2 = At(p, true, true, 2, b) + At(p, false, true, 2, b);
    worst = std::max(worst, std::abs(m1 - m2));
  }
  return worst;
}

}  // namespace eprgame::testing

#endif  // EPRGAME_TESTS_ORACLES_H_
