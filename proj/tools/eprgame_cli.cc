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

// eprgame: command-line front end. Every subcommand writes exactly one JSON
// document to stdout. Exit codes: 0 success or pass, 1 domain failure or
// mismatch (with a JSON error object), 2 usage or parse error (diagnostic on
// stderr).
//
// Arguments naming a JSON input accept a file path, "-" for stdin, or the
// JSON text itself when it starts with '{'. EPRGAME_TOL overrides the default
// validation tolerance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eprgame/epr_game.h"
#include "eprgame/game_core.h"
#include "eprgame/games_catalog.h"
#include "eprgame/json_io.h"
#include "eprgame/montecarlo.h"
#include "eprgame/probability_box.h"
#include "eprgame/reproduce.h"
#include "eprgame/search.h"

namespace eprgame {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result of a subcommand: the JSON document and the exit code.
struct Outcome {
  Json document;
  int code = kExitOk;
};

std::string ReadInput(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read input file '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json LoadJson(const std::string& arg) { return ParseJson(ReadInput(arg)); }

double DefaultTolerance() {
  const char* env = std::getenv("EPRGAME_TOL");
  if (env == nullptr || *env == '\0') return kUserTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol >= 0)) {
    throw UsageError(std::string("EPRGAME_TOL is not a nonnegative number: ") +
                     env);
  }
  return tol;
}

GameFamily RequireFamily(const GameSpec& game, const std::string& why) {
  if (!game.family) {
    throw std::invalid_argument(why + " needs a game with a \"family\" field");
  }
  return *game.family;
}

Outcome BoxCheck(const std::string& input, double tol) {
  const JointBox::Values p = BoxValuesFromJson(LoadJson(input));
  const ValidationReport report = Validate(p, tol);
  Json doc = ToJson(report);
  doc["tol"] = tol;
  return {doc, report.ok() ? kExitOk : kExitDomain};
}

Outcome BoxComplete(const std::string& input, double tol) {
  const FreeBlock free = FreeBlockFromJson(LoadJson(input));
  const auto completed = CompleteFromFree(free, tol);
  if (const auto* box = std::get_if<JointBox>(&completed)) {
    Json doc = {{"valid", true}};
    doc["box"] = ToJson(*box);
    return {doc};
  }
  Json doc = {{"valid", false}};
  doc["invalid"] = ToJson(std::get<InvalidCompletion>(completed));
  return {doc, kExitDomain};
}

Outcome BoxFactorize(const std::string& input, double tol) {
  const JointBox box = BoxFromJson(LoadJson(input), tol);
  const auto result = Factorize(box, tol);
  if (const auto* coins = std::get_if<CoinProfile>(&result)) {
    return {{{"verdict", "Factorizable"}, {"coins", ToJson(*coins)}}};
  }
  return {{{"verdict", "NotFactorizable"},
           {"detail", ToJson(std::get<NotFactorizable>(result))}}};
}

Outcome BoxBell(const std::string& input, double tol) {
  const JointBox box = BoxFromJson(LoadJson(input), tol);
  const ChExtremes ch = MaxChViolation(box);
  Json doc = {{"ch_default", ClauserHorneValue(box)},
              {"ch_max", ch.max_value},
              {"ch_min", ch.min_value},
              {"chsh_default", ChshCorrelationSum(box)},
              {"chsh_max", MaxChshCorrelationSum(box)}};
  doc["ch_extremes"] = ToJson(ch);
  return {doc};
}

Outcome GameEquilibria(const std::string& input) {
  const GameSpec game = GameFromJson(LoadJson(input));
  const BlockPayoffs blocks = ClassicalBlockPayoffs(game.matrix);
  const EquilibriumSet set = EnumerateEquilibria(blocks);
  Json payoffs = Json::array();
  for (const StrategyProfile& p : set.points) {
    payoffs.push_back(ToJson(MixedPayoffs(blocks, p)));
  }
  const PayoffMatrix& m = game.matrix;
  Json doc = {{"matrix", {{"K", m.k}, {"L", m.l}, {"M", m.m}, {"N", m.n}}}};
  doc["equilibria"] = ToJson(set);
  doc["payoffs"] = payoffs;
  if (game.family) {
    const DeltaParams d = Deltas(*game.family);
    doc["family"] = FamilyPrefix(game.family->kind());
    doc["deltas"] = {{"d1", d.d1}, {"d2", d.d2}, {"d3", d.d3}, {"d4", d.d4}};
    doc["closed_form"] = ToJson(ClassicalEquilibria(*game.family));
  }
  return {doc};
}

Outcome AnalyzeCommand(const std::string& game_input,
                       const std::string& box_input,
                       const std::vector<std::string>& constraint_names,
                       double tol) {
  const GameSpec game = GameFromJson(LoadJson(game_input));
  const JointBox box = BoxFromJson(LoadJson(box_input), tol);
  std::vector<ConstraintSet> sets;
  if (!constraint_names.empty()) {
    const GameFamily family = RequireFamily(game, "--constraints");
    for (const std::string& name : constraint_names) {
      sets.push_back(ConstraintSetByName(family, name));
    }
  }
  const AnalysisReport report = Analyze(game.matrix, box, sets, tol);
  Json doc = ToJson(report);
  Json residuals = Json::array();
  for (const StrategyProfile& p : report.equilibria.points) {
    const NashResiduals r = NashInequalityResiduals(game.matrix, box, p);
    residuals.push_back({{"alice", r.alice}, {"bob", r.bob}});
  }
  doc["nash_residuals"] = residuals;
  return {doc};
}

Outcome ReproduceCommand(const std::string& scenario) {
  if (scenario == "all") {
    Json reports = Json::array();
    bool passed = true;
    for (const std::string& name : ScenarioNames()) {
      const ReproductionReport r = Reproduce(name);
      passed = passed && r.passed;
      reports.push_back(ToJson(r));
    }
    return {{{"passed", passed}, {"scenarios", reports}},
            passed ? kExitOk : kExitDomain};
  }
  const ReproductionReport r = Reproduce(scenario);
  return {ToJson(r), r.passed ? kExitOk : kExitDomain};
}

Outcome SimulateCommand(const std::string& game_input,
                        const std::string& box_input, double x, double y,
                        uint64_t runs, uint64_t seed, unsigned workers,
                        double tol) {
  const GameSpec game = GameFromJson(LoadJson(game_input));
  const JointBox box = BoxFromJson(LoadJson(box_input), tol);
  const PlayConfig config{game.matrix, box, {x, y}, runs, seed};
  const EmpiricalEstimate estimate = Simulate(config, workers);
  Json doc = ToJson(estimate);
  doc["profile"] = ToJson(config.profile);
  doc["rng"] = "philox4x64-10";
  doc["analytic"] =
      ToJson(MixedPayoffs(EprBlockPayoffs(game.matrix, box), config.profile));
  return {doc};
}

Outcome SearchCommand(const std::string& game_input,
                      const std::string& constraint_name, uint64_t samples,
                      uint64_t seed, const std::vector<std::string>& inject,
                      double hit_tol, unsigned workers, double tol) {
  const GameSpec game = GameFromJson(LoadJson(game_input));
  const GameFamily family = RequireFamily(game, "search");
  std::optional<ConstraintSet> constraint;
  if (!constraint_name.empty() && constraint_name != "none") {
    constraint = ConstraintSetByName(family, constraint_name);
  }
  std::vector<JointBox> injected;
  for (const std::string& input : inject) {
    injected.push_back(BoxFromJson(LoadJson(input), tol));
  }
  const SearchResult result =
      ScanForNewEquilibria({family, constraint, samples, seed, hit_tol,
                            injected, workers});
  Json doc = ToJson(result);
  doc["seed"] = seed;
  doc["samples"] = samples;
  doc["constraint"] = constraint ? constraint->label : "none";
  return {doc};
}

Json ErrorDocument(const std::string& message) {
  return {{"error", message}};
}

int Run(int argc, char** argv) {
  CLI::App app{"Games played through EPR-type joint-probability boxes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  double tol = -1;
  auto add_tol = [&tol](CLI::App* sub) {
    sub->add_option("--tol", tol, "validation tolerance (default 1e-9)")
        ->check(CLI::NonNegativeNumber);
  };

  std::string box_input, game_input, free_input, scenario, constraint;
  std::vector<std::string> constraints, inject;
  double x = 0, y = 0, hit_tol = 1e-6;
  uint64_t runs = 0, samples = 0, seed = 0;
  unsigned workers = 0;

  auto* box_check = app.add_subcommand("box-check", "validate a box");
  box_check->add_option("box", box_input, "box JSON")->required();
  add_tol(box_check);

  auto* box_complete =
      app.add_subcommand("box-complete", "complete a box from free entries");
  box_complete->add_option("free", free_input, "free block JSON")->required();
  add_tol(box_complete);

  auto* box_factorize =
      app.add_subcommand("box-factorize", "test factorizability");
  box_factorize->add_option("box", box_input, "box JSON")->required();
  add_tol(box_factorize);

  auto* box_bell = app.add_subcommand("box-bell", "CH and CHSH values");
  box_bell->add_option("box", box_input, "box JSON")->required();
  add_tol(box_bell);

  auto* game_eq =
      app.add_subcommand("game-equilibria", "classical equilibria of a game");
  game_eq->add_option("game", game_input, "game JSON")->required();

  auto* analyze = app.add_subcommand("analyze", "analyze a game and a box");
  analyze->add_option("game", game_input, "game JSON")->required();
  analyze->add_option("box", box_input, "box JSON")->required();
  analyze->add_option("--constraints", constraints,
                      "constraint sets, e.g. chicken-mixed");
  add_tol(analyze);

  auto* reproduce =
      app.add_subcommand("reproduce", "run a frozen scenario ('all' for all)");
  reproduce->add_option("scenario", scenario, "scenario name")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play");
  simulate->add_option("game", game_input, "game JSON")->required();
  simulate->add_option("box", box_input, "box JSON")->required();
  simulate->add_option("--x", x, "Alice's probability of S1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--y", y, "Bob's probability of S1'")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--runs", runs, "number of runs")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "64-bit seed")->required();
  simulate->add_option("--workers", workers, "threads (0: all cores)");
  add_tol(simulate);

  auto* search = app.add_subcommand("search", "scan boxes for new equilibria");
  search->add_option("game", game_input, "game JSON with a family")
      ->required();
  search->add_option("--constraint", constraint,
                     "constraint set name, or none");
  search->add_option("--samples", samples, "number of sampled boxes")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", seed, "64-bit seed")->required();
  search->add_option("--inject", inject, "boxes prepended to the stream");
  search->add_option("--hit-tol", hit_tol,
                     "Hausdorff distance that counts as new (default 1e-6)");
  search->add_option("--workers", workers, "threads (0: all cores)");
  add_tol(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    std::cerr << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "eprgame: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (tol < 0) tol = DefaultTolerance();
    if (*box_check) {
      outcome = BoxCheck(box_input, tol);
    } else if (*box_complete) {
      outcome = BoxComplete(free_input, tol);
    } else if (*box_factorize) {
      outcome = BoxFactorize(box_input, tol);
    } else if (*box_bell) {
      outcome = BoxBell(box_input, tol);
    } else if (*game_eq) {
      outcome = GameEquilibria(game_input);
    } else if (*analyze) {
      outcome = AnalyzeCommand(game_input, box_input, constraints, tol);
    } else if (*reproduce) {
      outcome = ReproduceCommand(scenario);
    } else if (*simulate) {
      outcome = SimulateCommand(game_input, box_input, x, y, runs, seed,
                                workers, tol);
    } else if (*search) {
      outcome = SearchCommand(game_input, constraint, samples, seed, inject,
                              hit_tol, workers, tol);
    }
  } catch (const UsageError& e) {
    std::cerr << "eprgame: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonFormatError& e) {
    std::cerr << "eprgame: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidBoxError& e) {
    outcome = {ErrorDocument(e.what()), kExitDomain};
    outcome.document["validation"] = ToJson(e.report());
  } catch (const std::exception& e) {
    outcome = {ErrorDocument(e.what()), kExitDomain};
  }
  std::cout << outcome.document.dump(2) << "\n";
  return outcome.code;
}

}  // namespace
}  // namespace eprgame

int main(int argc, char** argv) { return eprgame::Run(argc, argv); }
