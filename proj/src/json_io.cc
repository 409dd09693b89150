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

#include "eprgame/json_io.h"

#include <set>

namespace eprgame {
namespace {

void RequireObject(const Json& j, const std::string& what) {
  if (!j.is_object()) throw JsonFormatError(what + " must be a JSON object");
}

// Rejects keys outside `allowed`.
void RequireKeys(const Json& j, const std::set<std::string>& allowed,
                 const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw JsonFormatError("unexpected field '" + key + "' in " + what);
    }
  }
}

double Number(const Json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) {
    throw JsonFormatError("missing field '" + key + "' in " + what);
  }
  if (!j.at(key).is_number()) {
    throw JsonFormatError("field '" + key + "' in " + what +
                          " must be a number");
  }
  return j.at(key).get<double>();
}

template <size_t N>
std::array<double, N> NumberArray(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != N) {
    throw JsonFormatError(what + " must be an array of " + std::to_string(N) +
                          " numbers");
  }
  std::array<double, N> out;
  for (size_t i = 0; i < N; ++i) {
    if (!j[i].is_number()) {
      throw JsonFormatError(what + " must contain only numbers");
    }
    out[i] = j[i].get<double>();
  }
  return out;
}

std::string OneOf(const Json& j, const std::set<std::string>& keys,
                  const std::string& what) {
  std::string found;
  for (const std::string& k : keys) {
    if (!j.contains(k)) continue;
    if (!found.empty()) {
      throw JsonFormatError(what + " must use exactly one of its forms, got '" +
                            found + "' and '" + k + "'");
    }
    found = k;
  }
  if (found.empty()) {
    std::string names;
    for (const std::string& k : keys) names += (names.empty() ? "" : ", ") + k;
    throw JsonFormatError(what + " needs one of: " + names);
  }
  return found;
}

Json Pair(const StrategyProfile& p) { return Json::array({p.x, p.y}); }

std::string OutcomeSign(Outcome o) { return o == Outcome::kPlus ? "+" : "-"; }

Json AssignmentJson(const ChAssignment& a, const SettingRoles& roles) {
  return {{"S1", OutcomeSign(a.s1)},
          {"S2", OutcomeSign(a.s2)},
          {"S1'", OutcomeSign(a.s1p)},
          {"S2'", OutcomeSign(a.s2p)},
          {"alice_first_setting", roles.alice_first},
          {"bob_first_setting", roles.bob_first}};
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(std::string("malformed JSON: ") + e.what());
  }
}

JointBox NamedBox(const std::string& name) {
  if (name == "uniform") return UniformBox();
  if (name == "chsh-max-1") return MaximalViolationBox(1);
  if (name == "chsh-max-2") return MaximalViolationBox(2);
  throw JsonFormatError("unknown named box '" + name +
                        "' (expected uniform, chsh-max-1 or chsh-max-2)");
}

JointBox::Values BoxValuesFromJson(const Json& j) {
  RequireObject(j, "box");
  const std::string form = OneOf(j, {"p", "coins", "named"}, "box");
  RequireKeys(j, {form}, "box");
  if (form == "p") return NumberArray<16>(j.at("p"), "box field 'p'");
  if (form == "named") {
    if (!j.at("named").is_string()) {
      throw JsonFormatError("box field 'named' must be a string");
    }
    return NamedBox(j.at("named").get<std::string>()).values();
  }
  const Json& c = j.at("coins");
  RequireObject(c, "coins");
  RequireKeys(c, {"r", "s", "rp", "sp"}, "coins");
  const CoinProfile coins{Number(c, "r", "coins"), Number(c, "s", "coins"),
                          Number(c, "rp", "coins"), Number(c, "sp", "coins")};
  return FromCoins(coins).values();
}

JointBox BoxFromJson(const Json& j, double tol) {
  return JointBox::Create(BoxValuesFromJson(j), tol);
}

GameSpec GameFromJson(const Json& j) {
  RequireObject(j, "game");
  auto matrix_of = [&j] {
    return PayoffMatrix{Number(j, "K", "game"), Number(j, "L", "game"),
                        Number(j, "M", "game"), Number(j, "N", "game")};
  };
  if (!j.contains("family")) {
    RequireKeys(j, {"K", "L", "M", "N"}, "game");
    PayoffMatrix m = matrix_of();
    m.Validate();
    return {m, std::nullopt};
  }
  if (!j.at("family").is_string()) {
    throw JsonFormatError("game field 'family' must be a string");
  }
  const std::string family = j.at("family").get<std::string>();
  if (family == "chicken") {
    RequireKeys(j, {"family", "alpha", "beta"}, "game");
    GameFamily g =
        GameFamily::Chicken(Number(j, "alpha", "game"), Number(j, "beta", "game"));
    return {g.matrix(), g};
  }
  RequireKeys(j, {"family", "K", "L", "M", "N"}, "game");
  if (family == "pd") {
    GameFamily g = GameFamily::PrisonersDilemma(matrix_of());
    return {g.matrix(), g};
  }
  if (family == "stag-hunt") {
    GameFamily g = GameFamily::StagHunt(matrix_of());
    return {g.matrix(), g};
  }
  throw JsonFormatError("unknown game family '" + family +
                        "' (expected pd, stag-hunt or chicken)");
}

FreeBlock FreeBlockFromJson(const Json& j) {
  RequireObject(j, "free block");
  FreeBlock free;
  if (j.contains("mu")) {
    RequireKeys(j, {"mu"}, "free block");
    free.values = NumberArray<8>(j.at("mu"), "free block field 'mu'");
    return free;
  }
  std::set<std::string> names;
  for (int k : FreeBlock::kIndices) names.insert("p" + std::to_string(k));
  RequireKeys(j, names, "free block");
  for (size_t i = 0; i < FreeBlock::kIndices.size(); ++i) {
    free.values[i] = Number(
        j, "p" + std::to_string(FreeBlock::kIndices[i]), "free block");
  }
  return free;
}

Json ToJson(const JointBox& box) {
  return {{"p", Json(std::vector<double>(box.values().begin(),
                                         box.values().end()))}};
}

Json ToJson(const ValidationReport& report) {
  Json residuals = Json::array();
  for (const ConstraintResidual& r : report.residuals) {
    residuals.push_back(
        {{"name", r.name}, {"residual", r.residual}, {"ok", r.ok}});
  }
  return {{"ok", report.ok()},
          {"range_ok", report.range_ok},
          {"normalized", report.normalized},
          {"no_signaling", report.no_signaling},
          {"residuals", residuals},
          {"violations", report.violations}};
}

Json ToJson(const CoinProfile& coins) {
  return {{"r", coins.r}, {"s", coins.s}, {"rp", coins.rp}, {"sp", coins.sp}};
}

Json ToJson(const NotFactorizable& nf) {
  return {{"max_residual", nf.max_residual},
          {"worst_index", "p" + std::to_string(nf.worst_index)}};
}

Json ToJson(const InvalidCompletion& invalid) {
  Json offending = Json::array();
  for (int k : invalid.offending) offending.push_back("p" + std::to_string(k));
  return {{"p", Json(std::vector<double>(invalid.values.begin(),
                                         invalid.values.end()))},
          {"offending", offending}};
}

Json ToJson(const StrategyProfile& p) { return {{"x", p.x}, {"y", p.y}}; }

Json ToJson(const PayoffPair& p) {
  return {{"alice", p.alice}, {"bob", p.bob}};
}

Json ToJson(const EquilibriumSet& set) {
  Json points = Json::array();
  for (const StrategyProfile& p : set.points) points.push_back(Pair(p));
  Json segments = Json::array();
  for (const Segment& s : set.segments) {
    segments.push_back({{"from", Pair(s.Start())}, {"to", Pair(s.End())}});
  }
  return {{"points", points},
          {"segments", segments},
          {"entire_square", set.entire_square},
          {"text", set.ToString()}};
}

Json ToJson(const ChExtremes& ch) {
  return {{"max", ch.max_value},
          {"max_at", AssignmentJson(ch.max_assignment, ch.max_roles)},
          {"min", ch.min_value},
          {"min_at", AssignmentJson(ch.min_assignment, ch.min_roles)},
          {"violates", ch.Violates()}};
}

Json ToJson(const ConstraintCheck& check) {
  return {{"label", check.label},
          {"satisfied", check.satisfied},
          {"residuals", check.residuals}};
}

Json ToJson(const AnalysisReport& report) {
  Json blocks = {{"alice", report.blocks.alice}, {"bob", report.blocks.bob}};
  Json points = Json::array();
  for (size_t i = 0; i < report.equilibria.points.size(); ++i) {
    points.push_back({{"profile", Pair(report.equilibria.points[i])},
                      {"payoff", ToJson(report.point_payoffs[i])},
                      {"weak", static_cast<bool>(report.point_weak[i])}});
  }
  Json segments = Json::array();
  for (size_t i = 0; i < report.equilibria.segments.size(); ++i) {
    const Segment& s = report.equilibria.segments[i];
    segments.push_back({{"from", Pair(s.Start())},
                        {"to", Pair(s.End())},
                        {"payoff_from", ToJson(report.segment_payoffs[i].start)},
                        {"payoff_to", ToJson(report.segment_payoffs[i].end)}});
  }
  Json constraints = Json::array();
  for (const ConstraintCheck& c : report.constraints) {
    constraints.push_back(ToJson(c));
  }
  return {{"blocks", blocks},
          {"equilibria", ToJson(report.equilibria)},
          {"equilibrium_points", points},
          {"equilibrium_segments", segments},
          {"factorizable", report.factorizable},
          {"factorization_residual", report.factorization_residual},
          {"ch", ToJson(report.ch)},
          {"chsh", report.chsh},
          {"chsh_max", report.chsh_max},
          {"constraints", constraints}};
}

Json ToJson(const EmpiricalEstimate& e) {
  return {{"meanA", e.mean_a},     {"meanB", e.mean_b},
          {"stderrA", e.stderr_a}, {"stderrB", e.stderr_b},
          {"counts", e.counts},    {"seed", e.seed},
          {"runs", e.runs}};
}

Json ToJson(const SearchHit& hit) {
  return {{"index", hit.index},
          {"box", ToJson(hit.box)},
          {"equilibria", ToJson(hit.equilibria)},
          {"hausdorff", hit.hausdorff},
          {"classical_diff", hit.classical_diff},
          {"factorizable", hit.factorizable},
          {"chsh", hit.chsh}};
}

Json ToJson(const SearchResult& result) {
  Json hits = Json::array();
  for (const SearchHit& h : result.hits) hits.push_back(ToJson(h));
  return {{"scanned", result.scanned},
          {"attempts", result.stats.attempts},
          {"accepted", result.stats.accepted},
          {"injected", result.stats.injected},
          {"acceptance_rate", result.stats.AcceptanceRate()},
          {"free_dimension", result.stats.free_dimension},
          {"hits", hits}};
}

Json ToJson(const ReproductionReport& report) {
  Json checks = Json::array();
  for (const ReproCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"expected", c.expected},
                      {"actual", c.actual}});
  }
  return {{"scenario", report.scenario},
          {"passed", report.passed},
          {"checks", checks},
          {"notes", report.notes}};
}

Json ToJson(const std::vector<ClassicalEquilibrium>& equilibria) {
  Json out = Json::array();
  for (const ClassicalEquilibrium& e : equilibria) {
    out.push_back({{"target", e.target},
                   {"profile", Pair(e.profile)},
                   {"payoff", ToJson(e.payoff)}});
  }
  return out;
}

}  // namespace eprgame
