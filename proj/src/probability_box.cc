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

#include "eprgame/probability_box.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace eprgame {

JointBox UncheckedBox(const JointBox::Values& p) { return JointBox(p); }

namespace {

struct LinearCheck {
  const char* name;
  std::array<int, 4> plus_minus;  // p_a + p_b - p_c - p_d (1-based)
};

// p_a + p_b - p_c - p_d = 0 for each row.
constexpr std::array<LinearCheck, 8> kNoSignaling = {{
    {"p1+p2-p5-p6", {1, 2, 5, 6}},
    {"p1+p3-p9-p11", {1, 3, 9, 11}},
    {"p9+p10-p13-p14", {9, 10, 13, 14}},
    {"p5+p7-p13-p15", {5, 7, 13, 15}},
    {"p3+p4-p7-p8", {3, 4, 7, 8}},
    {"p11+p12-p15-p16", {11, 12, 15, 16}},
    {"p2+p4-p10-p12", {2, 4, 10, 12}},
    {"p6+p8-p14-p16", {6, 8, 14, 16}},
}};

std::string FormatEntry(int k, double v) {
  std::ostringstream out;
  out.precision(17);
  out << "p" << k << " = " << v;
  return out.str();
}

}  // namespace

int CerecedaIndex(Outcome alice_out, Outcome bob_out, Setting a, Setting b) {
  if (a.party != Party::kAlice || b.party != Party::kBob) {
    throw std::invalid_argument(
        "CerecedaIndex expects an Alice setting followed by a Bob setting");
  }
  if ((a.index != 1 && a.index != 2) || (b.index != 1 && b.index != 2)) {
    throw std::invalid_argument("setting index must be 1 or 2");
  }
  const int pa = static_cast<int>(alice_out);
  const int pb = static_cast<int>(bob_out);
  return 1 + (1 - pb) / 2 + 2 * ((1 - pa) / 2) + 4 * (b.index - 1) +
         8 * (a.index - 1);
}

ValidationReport Validate(std::span<const double, 16> p, double tol) {
  ValidationReport report;
  report.range_ok = true;
  for (int k = 1; k <= 16; ++k) {
    const double v = p[k - 1];
    if (!std::isfinite(v) || v < -tol || v > 1 + tol) {
      report.range_ok = false;
      report.violations.push_back("out of range: " + FormatEntry(k, v));
    }
  }

  report.normalized = true;
  for (int block = 0; block < 4; ++block) {
    const int base = 4 * block;
    const double r = p[base] + p[base + 1] + p[base + 2] + p[base + 3] - 1;
    const bool ok = std::abs(r) <= tol;
    std::string name = "p" + std::to_string(base + 1) + "+p" +
                       std::to_string(base + 2) + "+p" +
                       std::to_string(base + 3) + "+p" +
                       std::to_string(base + 4) + "-1";
    if (!ok) {
      report.normalized = false;
      report.violations.push_back("normalization: " + name);
    }
    report.residuals.push_back({std::move(name), r, ok});
  }

  report.no_signaling = true;
  for (const LinearCheck& c : kNoSignaling) {
    const auto& i = c.plus_minus;
    const double r = p[i[0] - 1] + p[i[1] - 1] - p[i[2] - 1] - p[i[3] - 1];
    const bool ok = std::abs(r) <= tol;
    if (!ok) {
      report.no_signaling = false;
      report.violations.push_back(std::string("no-signaling: ") + c.name);
    }
    report.residuals.push_back({c.name, r, ok});
  }
  return report;
}

InvalidBoxError::InvalidBoxError(ValidationReport report)
    : std::runtime_error([&report] {
        std::string msg = "invalid joint-probability box";
        for (const std::string& v : report.violations) msg += "; " + v;
        return msg;
      }()),
      report_(std::move(report)) {}

JointBox JointBox::Create(const Values& p, double tol) {
  ValidationReport report = Validate(p, tol);
  if (!report.ok()) throw InvalidBoxError(std::move(report));
  return JointBox(p);
}

std::optional<JointBox> JointBox::TryCreate(const Values& p, double tol) {
  if (!Validate(p, tol).ok()) return std::nullopt;
  return JointBox(p);
}

std::array<double, 4> JointBox::Block(int a, int b) const {
  const int base = 8 * (a - 1) + 4 * (b - 1);
  return {p_[base], p_[base + 1], p_[base + 2], p_[base + 3]};
}

double JointBox::Joint(Outcome alice_out, Outcome bob_out, Setting a,
                       Setting b) const {
  return p(CerecedaIndex(alice_out, bob_out, a, b));
}

double JointBox::AliceMarginal(Outcome out, Setting a) const {
  return Joint(out, Outcome::kPlus, a, kS1Prime) +
         Joint(out, Outcome::kMinus, a, kS1Prime);
}

double JointBox::BobMarginal(Outcome out, Setting b) const {
  return Joint(Outcome::kPlus, out, kS1, b) +
         Joint(Outcome::kMinus, out, kS1, b);
}

void CoinProfile::Validate() const {
  for (double v : {r, s, rp, sp}) {
    if (!(v >= 0 && v <= 1)) {
      throw std::invalid_argument("coin probabilities must lie in [0,1]");
    }
  }
}

double FreeBlock::p(int k) const {
  for (size_t i = 0; i < kIndices.size(); ++i) {
    if (kIndices[i] == k) return values[i];
  }
  throw std::invalid_argument("p" + std::to_string(k) +
                              " is not a free entry");
}

JointBox FromCoins(const CoinProfile& coins) {
  coins.Validate();
  // Alice's head probability per setting, then Bob's.
  const std::array<double, 2> alice = {coins.r, coins.s};
  const std::array<double, 2> bob = {coins.rp, coins.sp};
  JointBox::Values p{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const int base = 8 * a + 4 * b;
      const double ha = alice[a];
      const double hb = bob[b];
      p[base] = ha * hb;
      p[base + 1] = ha * (1 - hb);
      p[base + 2] = hb * (1 - ha);
      p[base + 3] = (1 - ha) * (1 - hb);
    }
  }
  return JointBox::Create(p, kInternalTolerance);
}

CoinProfile Marginals(const JointBox& box) {
  return {box.p(1) + box.p(2), box.p(9) + box.p(10), box.p(1) + box.p(3),
          box.p(5) + box.p(7)};
}

std::variant<CoinProfile, NotFactorizable> Factorize(const JointBox& box,
                                                     double tol) {
  const CoinProfile c = Marginals(box);
  const std::array<double, 2> alice = {c.r, c.s};
  const std::array<double, 2> bob = {c.rp, c.sp};
  NotFactorizable worst;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const int base = 8 * a + 4 * b;
      const double ha = alice[a];
      const double hb = bob[b];
      const std::array<double, 4> product = {ha * hb, ha * (1 - hb),
                                             hb * (1 - ha),
                                             (1 - ha) * (1 - hb)};
      for (int i = 0; i < 4; ++i) {
        const double r = std::abs(box.values()[base + i] - product[i]);
        if (r > worst.max_residual) {
          worst.max_residual = r;
          worst.worst_index = base + i + 1;
        }
      }
    }
  }
  if (worst.max_residual <= tol) return c;
  return worst;
}

std::array<double, 16> CompleteFromFreeUnchecked(const FreeBlock& free) {
  const double p1 = free.p(1), p4 = free.p(4), p5 = free.p(5),
               p8 = free.p(8), p9 = free.p(9), p12 = free.p(12),
               p14 = free.p(14), p15 = free.p(15);
  std::array<double, 16> p{};
  p[0] = p1;
  p[3] = p4;
  p[4] = p5;
  p[7] = p8;
  p[8] = p9;
  p[11] = p12;
  p[13] = p14;
  p[14] = p15;
  p[1] = (1 - p1 - p4 + p5 - p8 - p9 + p12 + p14 - p15) / 2;
  p[2] = (1 - p1 - p4 - p5 + p8 + p9 - p12 - p14 + p15) / 2;
  p[5] = (1 + p1 - p4 - p5 - p8 - p9 + p12 + p14 - p15) / 2;
  p[6] = (1 - p1 + p4 - p5 - p8 + p9 - p12 - p14 + p15) / 2;
  p[9] = (1 - p1 + p4 + p5 - p8 - p9 - p12 + p14 - p15) / 2;
  p[10] = (1 + p1 - p4 - p5 + p8 - p9 - p12 - p14 + p15) / 2;
  p[12] = (1 - p1 + p4 + p5 - p8 + p9 - p12 - p14 - p15) / 2;
  p[15] = (1 + p1 - p4 - p5 + p8 - p9 + p12 - p14 - p15) / 2;
  return p;
}

std::variant<JointBox, InvalidCompletion> CompleteFromFree(
    const FreeBlock& free, double tol) {
  for (double v : free.values) {
    if (!(v >= 0 && v <= 1)) {
      throw std::invalid_argument("free entries must lie in [0,1]");
    }
  }
  std::array<double, 16> p = CompleteFromFreeUnchecked(free);
  InvalidCompletion invalid;
  for (int k = 1; k <= 16; ++k) {
    if (p[k - 1] < -tol || p[k - 1] > 1 + tol) invalid.offending.push_back(k);
  }
  if (!invalid.offending.empty()) {
    invalid.values = p;
    return invalid;
  }
  return UncheckedBox(p);
}

FreeBlock ExtractFreeBlock(const JointBox& box) {
  FreeBlock free;
  for (size_t i = 0; i < FreeBlock::kIndices.size(); ++i) {
    free.values[i] = box.p(FreeBlock::kIndices[i]);
  }
  return free;
}

double ClauserHorneValue(const JointBox& box, const ChAssignment& assignment,
                         const SettingRoles& roles) {
  const Setting a1{Party::kAlice, roles.alice_first};
  const Setting a2{Party::kAlice, 3 - roles.alice_first};
  const Setting b1{Party::kBob, roles.bob_first};
  const Setting b2{Party::kBob, 3 - roles.bob_first};
  const ChAssignment& o = assignment;
  return box.Joint(o.s1, o.s1p, a1, b1) - box.Joint(o.s1, o.s2p, a1, b2) +
         box.Joint(o.s2, o.s1p, a2, b1) + box.Joint(o.s2, o.s2p, a2, b2) -
         box.AliceMarginal(o.s2, a2) - box.BobMarginal(o.s1p, b1);
}

ChExtremes MaxChViolation(const JointBox& box) {
  ChExtremes best;
  bool first = true;
  constexpr std::array<Outcome, 2> kOutcomes = {Outcome::kPlus,
                                                Outcome::kMinus};
  for (int af = 1; af <= 2; ++af) {
    for (int bf = 1; bf <= 2; ++bf) {
      const SettingRoles roles{af, bf};
      for (Outcome o1 : kOutcomes) {
        for (Outcome o2 : kOutcomes) {
          for (Outcome o3 : kOutcomes) {
            for (Outcome o4 : kOutcomes) {
              const ChAssignment as{o1, o2, o3, o4};
              const double v = ClauserHorneValue(box, as, roles);
              if (first || v > best.max_value) {
                best.max_value = v;
                best.max_assignment = as;
                best.max_roles = roles;
              }
              if (first || v < best.min_value) {
                best.min_value = v;
                best.min_assignment = as;
                best.min_roles = roles;
              }
              first = false;
            }
          }
        }
      }
    }
  }
  return best;
}

double Correlator(const JointBox& box, int a, int b) {
  const std::array<double, 4> q = box.Block(a, b);
  return q[0] - q[1] - q[2] + q[3];
}

double ChshCorrelationSum(const JointBox& box, const ChshSigns& signs) {
  int product = 1;
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("CHSH signs must be +1 or -1");
    }
    product *= s;
  }
  if (product != -1) {
    throw std::invalid_argument("CHSH signs must multiply to -1");
  }
  return signs[0] * Correlator(box, 1, 1) + signs[1] * Correlator(box, 1, 2) +
         signs[2] * Correlator(box, 2, 1) + signs[3] * Correlator(box, 2, 2);
}

double MaxChshCorrelationSum(const JointBox& box) {
  double best = -std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < 16; ++mask) {
    ChshSigns signs;
    int product = 1;
    for (int i = 0; i < 4; ++i) {
      signs[i] = (mask >> i) & 1 ? -1 : 1;
      product *= signs[i];
    }
    if (product != -1) continue;
    best = std::max(best, ChshCorrelationSum(box, signs));
  }
  return best;
}

JointBox MaximalViolationBox(int which) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("maximal-violation box must be 1 or 2");
  }
  const double high = (2 + std::sqrt(2.0)) / 8;
  const double low = (2 - std::sqrt(2.0)) / 8;
  const double free_value = which == 1 ? high : low;
  const double dependent_value = which == 1 ? low : high;
  JointBox::Values p{};
  for (int k : FreeBlock::kIndices) p[k - 1] = free_value;
  for (int k : kDependentIndices) p[k - 1] = dependent_value;
  return JointBox::Create(p, kInternalTolerance);
}

JointBox UniformBox() {
  JointBox::Values p;
  p.fill(0.25);
  return UncheckedBox(p);
}

XiBound ChXiBound(double w1, double w2, double v1, double v2, double c1,
                  double c2, double tol) {
  const bool hypothesis = 0 <= w1 && w1 <= c1 && 0 <= w2 && w2 <= c1 &&
                          0 <= v1 && v1 <= c2 && 0 <= v2 && v2 <= c2;
  if (!hypothesis) {
    throw std::invalid_argument(
        "Xi bound requires 0 <= w1,w2 <= c1 and 0 <= v1,v2 <= c2");
  }
  XiBound out;
  out.xi = w1 * v1 - w1 * v2 + w2 * v1 + w2 * v2 - c2 * w2 - c1 * v1;
  out.within_bounds = -c1 * c2 - tol <= out.xi && out.xi <= tol;
  return out;
}

}  // namespace eprgame
