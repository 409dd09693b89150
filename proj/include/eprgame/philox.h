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

#ifndef EPRGAME_PHILOX_H_
#define EPRGAME_PHILOX_H_

// Philox4x64-10, the counter-based generator of Salmon et al. (Random123).
// Every random number used by the simulator and the box sampler is a pure
// function of (seed, counter), so results do not depend on thread count or
// platform.
//
// Seed expansion: key = (seed, 0). The counter is (index, stream, 0, 0)
// where index is the run or sample number and stream separates independent
// uses of the same index.

#include <array>
#include <cstdint>

namespace eprgame {

class Philox4x64 {
 public:
  using Counter = std::array<uint64_t, 4>;
  using Key = std::array<uint64_t, 2>;

  static constexpr uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
  static constexpr uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
  static constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
  static constexpr int kRounds = 10;

  static Counter Block(Counter ctr, Key key) {
    for (int round = 0; round < kRounds; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      ctr = Round(ctr, key);
    }
    return ctr;
  }

  static Counter Generate(uint64_t seed, uint64_t index, uint64_t stream) {
    return Block({index, stream, 0, 0}, {seed, 0});
  }

  // Top 53 bits scaled to [0, 1).
  static double ToUnit(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

 private:
  static void MulHiLo(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    *hi = static_cast<uint64_t>(product >> 64);
    *lo = static_cast<uint64_t>(product);
  }

  static Counter Round(const Counter& c, const Key& k) {
    uint64_t hi0, lo0, hi1, lo1;
    MulHiLo(kMultiplier0, c[0], &hi0, &lo0);
    MulHiLo(kMultiplier1, c[2], &hi1, &lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

}  // namespace eprgame

#endif  // EPRGAME_PHILOX_H_
