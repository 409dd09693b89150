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

#ifndef EPRGAME_JSON_IO_H_
#define EPRGAME_JSON_IO_H_

// JSON formats.
//
// Box, exactly one of:
//   {"p": [p1, ..., p16]}
//   {"coins": {"r": .., "s": .., "rp": .., "sp": ..}}
//   {"named": "uniform" | "chsh-max-1" | "chsh-max-2"}
// Game, either a raw matrix {"K": .., "L": .., "M": .., "N": ..} or a family:
//   {"family": "pd" | "stag-hunt", "K": .., "L": .., "M": .., "N": ..}
//   {"family": "chicken", "alpha": .., "beta": ..}
// Free block, exactly one of:
//   {"p1": .., "p4": .., "p5": .., "p8": .., "p9": .., "p12": .., "p14": ..,
//    "p15": ..}
//   {"mu": [p1, p4, p5, p8, p9, p12, p14, p15]}
//
// Doubles are written in the shortest form that reads back to the same
// value.

#include <optional>
#include <stdexcept>
#include <string>

#include "eprgame/epr_game.h"
#include "eprgame/game_core.h"
#include "eprgame/games_catalog.h"
#include "eprgame/montecarlo.h"
#include "eprgame/probability_box.h"
#include "eprgame/reproduce.h"
#include "eprgame/search.h"
#include "json.hpp"

namespace eprgame {

using Json = nlohmann::ordered_json;

// The input does not match the expected schema.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses text, throwing JsonFormatError on malformed JSON.
Json ParseJson(const std::string& text);

// The sixteen entries named by a box document, without validation.
JointBox::Values BoxValuesFromJson(const Json& j);
// Throws InvalidBoxError if the entries do not form a valid box.
JointBox BoxFromJson(const Json& j, double tol = kUserTolerance);
JointBox NamedBox(const std::string& name);

struct GameSpec {
  PayoffMatrix matrix;
  std::optional<GameFamily> family;
};
GameSpec GameFromJson(const Json& j);

FreeBlock FreeBlockFromJson(const Json& j);

Json ToJson(const JointBox& box);
Json ToJson(const ValidationReport& report);
Json ToJson(const CoinProfile& coins);
Json ToJson(const NotFactorizable& nf);
Json ToJson(const InvalidCompletion& invalid);
Json ToJson(const StrategyProfile& p);
Json ToJson(const PayoffPair& p);
Json ToJson(const EquilibriumSet& set);
Json ToJson(const ChExtremes& ch);
Json ToJson(const ConstraintCheck& check);
Json ToJson(const AnalysisReport& report);
Json ToJson(const EmpiricalEstimate& estimate);
Json ToJson(const SearchHit& hit);
Json ToJson(const SearchResult& result);
Json ToJson(const ReproductionReport& report);
Json ToJson(const std::vector<ClassicalEquilibrium>& equilibria);

}  // namespace eprgame

#endif  // EPRGAME_JSON_IO_H_
