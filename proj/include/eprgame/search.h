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

#ifndef EPRGAME_SEARCH_H_
#define EPRGAME_SEARCH_H_

// Random exploration of the no-signaling polytope.
//
// Attempt j draws the eight free entries from Philox4x64-10 at counters
// (j, 1, 0, 0) and (j, 1, 1, 0) under key (seed, 0). With a constraint set,
// the draw is projected orthogonally onto the affine subspace of free entries
// whose completion satisfies the set, then rejected unless every free and
// dependent entry lies in [0, 1].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eprgame/epr_game.h"
#include "eprgame/game_core.h"
#include "eprgame/games_catalog.h"
#include "eprgame/probability_box.h"

namespace eprgame {

// Sampling gives up after this many consecutive rejected attempts.
inline constexpr uint64_t kMaxRejectedAttempts = 1'000'000;

struct SamplerStats {
  uint64_t attempts = 0;
  uint64_t accepted = 0;
  uint64_t injected = 0;
  // Dimension of the affine subspace the draws are projected onto.
  int free_dimension = 8;

  double AcceptanceRate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(accepted) / attempts;
  }
};

struct SampleResult {
  std::vector<JointBox> boxes;  // injected boxes first, then samples
  SamplerStats stats;
};

// Returns `inject` followed by `samples` sampled boxes. Injected boxes do not
// count against `samples`. Throws std::invalid_argument if the constraint set
// is inconsistent on the free entries, and std::runtime_error naming the
// set after kMaxRejectedAttempts consecutive rejections.
SampleResult SampleBoxes(uint64_t samples, uint64_t seed,
                         const std::optional<ConstraintSet>& constraint,
                         const std::vector<JointBox>& inject = {});

struct SearchConfig {
  GameFamily family;
  std::optional<ConstraintSet> constraint;
  uint64_t samples = 1;
  uint64_t seed = 0;
  // Hausdorff distance beyond which an equilibrium set counts as new.
  double tol = 1e-6;
  std::vector<JointBox> inject;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct SearchHit {
  uint64_t index = 0;  // position in the sample stream, injected boxes first
  JointBox box;
  EquilibriumSet equilibria;
  double hausdorff = 0;
  std::string classical_diff;
  bool factorizable = false;
  double chsh = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;  // ordered by index
  SamplerStats stats;
  uint64_t scanned = 0;
};

// Describes how `found` differs from `reference`: reference points missing
// from `found` and elements of `found` away from `reference`.
std::string DescribeDifference(const EquilibriumSet& reference,
                               const EquilibriumSet& found, double tol);

// Analyzes every sampled box and reports those whose equilibrium set lies
// farther than `tol` from the family's classical equilibria. Throws
// std::invalid_argument if samples == 0.
SearchResult ScanForNewEquilibria(const SearchConfig& config);

}  // namespace eprgame

#endif  // EPRGAME_SEARCH_H_
