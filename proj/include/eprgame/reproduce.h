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

#ifndef EPRGAME_REPRODUCE_H_
#define EPRGAME_REPRODUCE_H_

// Fixed end-to-end scenarios with frozen expectations.

#include <cstdint>
#include <string>
#include <vector>

namespace eprgame {

inline constexpr uint64_t kReproductionSeed = 1;

struct ReproCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct ReproductionReport {
  std::string scenario;
  bool passed = false;
  std::vector<ReproCheck> checks;
  std::vector<std::string> notes;
};

// "pd-classical", "pd-quantum", "sh-classical", "sh-quantum-cases",
// "chicken-classical", "chicken-set1", "chicken-set2",
// "sh-maximal-sets-incompatible".
std::vector<std::string> ScenarioNames();

// Throws std::invalid_argument for an unknown scenario.
ReproductionReport Reproduce(const std::string& scenario);

}  // namespace eprgame

#endif  // EPRGAME_REPRODUCE_H_
