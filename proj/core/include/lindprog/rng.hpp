// Copyright 2026 The lindprog developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of this license at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINDPROG_RNG_HPP_
#define LINDPROG_RNG_HPP_

#include <cstdint>

namespace lindprog {

// Counter-based generator (SplitMix64 finalizer applied to seed + counter
// increments). Output i depends only on (seed, i), so sample ranges can be
// split across workers with bit-identical totals for any worker count.
struct CounterRng {
  uint64_t seed = 0;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t at(uint64_t counter) const {
    return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform_at(uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  // Decorrelated stream for nested uses (e.g. per-trotter-step draws).
  CounterRng derived(uint64_t index) const {
    return CounterRng{mix(seed ^ mix(index + 0x51ED2701A9B4E22FULL))};
  }
};

}  // namespace lindprog

#endif  // LINDPROG_RNG_HPP_
