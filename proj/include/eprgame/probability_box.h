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

#ifndef EPRGAME_PROBABILITY_BOX_H_
#define EPRGAME_PROBABILITY_BOX_H_

// Joint-probability boxes of a two-party, two-setting, two-outcome
// experiment. Entries are numbered p1..p16:
//
//   k = 1 + (1 - b_out)/2 + 2 (1 - a_out)/2 + 4 (b - 1) + 8 (a - 1)
//
// so each run of four consecutive entries is the block for one setting pair
// (a, b), ordered (+,+), (+,-), (-,+), (-,-) with Alice's outcome first:
//
//              S1'            S2'
//   S1     p1  p2  p3  p4   p5  p6  p7  p8
//   S2     p9 p10 p11 p12  p13 p14 p15 p16

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eprgame {

// Tolerance for boxes read from user data.
inline constexpr double kUserTolerance = 1e-9;
// Tolerance for boxes built internally from exact formulas.
inline constexpr double kInternalTolerance = 1e-12;

enum class Party { kAlice, kBob };

// A measurement setting: index 1 or 2 (S1/S2 for Alice, S1'/S2' for Bob).
struct Setting {
  Party party = Party::kAlice;
  int index = 1;
};

inline constexpr Setting kS1{Party::kAlice, 1};
inline constexpr Setting kS2{Party::kAlice, 2};
inline constexpr Setting kS1Prime{Party::kBob, 1};
inline constexpr Setting kS2Prime{Party::kBob, 2};

enum class Outcome : int { kPlus = 1, kMinus = -1 };

// Returns k in 1..16. Throws std::invalid_argument if `a` is not an Alice
// setting, `b` is not a Bob setting, or an index is not 1 or 2.
int CerecedaIndex(Outcome alice_out, Outcome bob_out, Setting a, Setting b);

struct ConstraintResidual {
  std::string name;
  double residual = 0;  // signed: lhs - rhs
  bool ok = false;
};

struct ValidationReport {
  bool range_ok = false;
  bool normalized = false;
  bool no_signaling = false;
  // Four block normalizations followed by the eight no-signaling equalities.
  std::vector<ConstraintResidual> residuals;
  std::vector<std::string> violations;

  bool ok() const { return range_ok && normalized && no_signaling; }
};

// Checks range, the four block normalizations and the eight no-signaling
// equalities. Never throws; non-finite entries are range violations.
ValidationReport Validate(std::span<const double, 16> p,
                          double tol = kUserTolerance);

class InvalidBoxError : public std::runtime_error {
 public:
  explicit InvalidBoxError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A validated box. The only ways to obtain one are `Create` (which validates)
// and the constructors in this module that produce valid boxes by
// construction.
class JointBox {
 public:
  using Values = std::array<double, 16>;

  // Throws InvalidBoxError carrying the report if validation fails.
  static JointBox Create(const Values& p, double tol = kUserTolerance);
  static std::optional<JointBox> TryCreate(const Values& p,
                                           double tol = kUserTolerance);

  // 1-based access, k in 1..16.
  double p(int k) const { return p_[k - 1]; }
  const Values& values() const { return p_; }
  // The four entries of setting pair (a, b), a and b in {1, 2}.
  std::array<double, 4> Block(int a, int b) const;
  // Pr(alice_out, bob_out; a, b).
  double Joint(Outcome alice_out, Outcome bob_out, Setting a,
               Setting b) const;
  // Alice's marginal for setting a, taken from the block with Bob at S1'.
  double AliceMarginal(Outcome out, Setting a) const;
  // Bob's marginal for setting b, taken from the block with Alice at S1.
  double BobMarginal(Outcome out, Setting b) const;

  bool operator==(const JointBox&) const = default;

 private:
  explicit JointBox(const Values& p) : p_(p) {}
  friend JointBox UncheckedBox(const Values& p);

  Values p_;
};

// Head probabilities of the four coins: r for S1, s for S2, rp for S1',
// sp for S2'.
struct CoinProfile {
  double r = 0;
  double s = 0;
  double rp = 0;
  double sp = 0;

  // Throws std::invalid_argument unless all four lie in [0, 1].
  void Validate() const;
  bool operator==(const CoinProfile&) const = default;
};

// The eight free entries {p1, p4, p5, p8, p9, p12, p14, p15}.
struct FreeBlock {
  static constexpr std::array<int, 8> kIndices = {1, 4, 5, 8, 9, 12, 14, 15};
  std::array<double, 8> values{};

  // Value of p_k for k in kIndices.
  double p(int k) const;
};

// The eight entries {p2, p3, p6, p7, p10, p11, p13, p16} determined by the
// free ones.
inline constexpr std::array<int, 8> kDependentIndices = {2,  3,  6,  7,
                                                         10, 11, 13, 16};

// The product box of four independent coins.
JointBox FromCoins(const CoinProfile& coins);

// (r, s, r', s') = (p1 + p2, p9 + p10, p1 + p3, p5 + p7).
CoinProfile Marginals(const JointBox& box);

struct NotFactorizable {
  double max_residual = 0;
  int worst_index = 0;  // k of the entry with the largest residual
};

// Recovers the coin profile if every entry equals the product of its
// marginals within `tol`; the candidate marginals are forced, so a single
// check decides factorizability.
std::variant<CoinProfile, NotFactorizable> Factorize(
    const JointBox& box, double tol = kUserTolerance);

struct InvalidCompletion {
  std::array<double, 16> values{};  // the completed (out-of-range) entries
  std::vector<int> offending;       // indices k outside [-tol, 1 + tol]
};

// Solves normalization plus no-signaling for the dependent entries.
std::variant<JointBox, InvalidCompletion> CompleteFromFree(
    const FreeBlock& free, double tol = kInternalTolerance);

// Dependent entries of the completion, without any range check.
std::array<double, 16> CompleteFromFreeUnchecked(const FreeBlock& free);

FreeBlock ExtractFreeBlock(const JointBox& box);

// Outcome chosen for each of the four settings S1, S2, S1', S2' in the
// Clauser-Horne expression.
struct ChAssignment {
  Outcome s1 = Outcome::kPlus;
  Outcome s2 = Outcome::kPlus;
  Outcome s1p = Outcome::kPlus;
  Outcome s2p = Outcome::kPlus;
};

// Which physical setting plays the role of S1 (and of S1') in the CH
// expression. The other setting of the same party plays S2 (resp. S2').
struct SettingRoles {
  int alice_first = 1;
  int bob_first = 1;
};

// Pr(S1,S1') - Pr(S1,S2') + Pr(S2,S1') + Pr(S2,S2') - Pr(S2) - Pr(S1')
// with outcomes chosen by `assignment`. Factorizable boxes give values in
// [-1, 0].
double ClauserHorneValue(const JointBox& box,
                         const ChAssignment& assignment = {},
                         const SettingRoles& roles = {});

struct ChExtremes {
  double max_value = 0;
  ChAssignment max_assignment;
  SettingRoles max_roles;
  double min_value = 0;
  ChAssignment min_assignment;
  SettingRoles min_roles;

  // True when the CH bound [-1, 0] is exceeded by more than `tol`.
  bool Violates(double tol = kInternalTolerance) const {
    return max_value > tol || min_value < -1 - tol;
  }
};

// Scans all 16 outcome assignments and all 4 setting-role permutations.
ChExtremes MaxChViolation(const JointBox& box);

// Signs for E11, E12, E21, E22. The product must be -1.
using ChshSigns = std::array<int, 4>;
inline constexpr ChshSigns kDefaultChshSigns = {1, 1, 1, -1};

// Correlator E(a, b) = p(+,+) + p(-,-) - p(+,-) - p(-,+).
double Correlator(const JointBox& box, int a, int b);

// Signed sum of the four correlators. Throws std::invalid_argument unless
// every sign is +-1 and their product is -1.
double ChshCorrelationSum(const JointBox& box,
                          const ChshSigns& signs = kDefaultChshSigns);

// Maximum of ChshCorrelationSum over the eight admissible sign patterns
// (equivalently the largest |sum| over the four single-minus patterns).
double MaxChshCorrelationSum(const JointBox& box);

// The two uniform-valued boxes with free entries (2 +- sqrt 2)/8 and
// dependent entries (2 -+ sqrt 2)/8. Throws std::invalid_argument unless
// which is 1 or 2.
JointBox MaximalViolationBox(int which);

JointBox UniformBox();

struct XiBound {
  double xi = 0;
  bool within_bounds = false;
};

// Xi = w1 v1 - w1 v2 + w2 v1 + w2 v2 - c2 w2 - c1 v1 for
// 0 <= w1, w2 <= c1 and 0 <= v1, v2 <= c2; within_bounds checks
// -c1 c2 <= Xi <= 0 up to `tol`. Throws std::invalid_argument when the
// hypothesis fails.
XiBound ChXiBound(double w1, double w2, double v1, double v2, double c1,
                  double c2, double tol = kInternalTolerance);

}  // namespace eprgame

#endif  // EPRGAME_PROBABILITY_BOX_H_
