// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_RNG_HPP
#define CLIFFSIM_RNG_HPP

#include <cstdint>

namespace cliffsim {

// Counter-based splittable generator (splitmix64 core). Children derived via
// split() are statistically independent of the parent stream, so batch items
// can be seeded as split(seed, item_index) without coordination.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next_u64() >> 63; }

    // Uniform in [0, n). n must be positive.
    uint64_t next_below(uint64_t n) {
        // Rejection sampling on the top range keeps the draw exactly uniform.
        uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    Rng split(uint64_t tag) {
        Rng child(state_ ^ (0x6a09e667f3bcc909ULL + tag * 0xd6e8feb86659fd93ULL));
        child.next_u64();
        return child;
    }

   private:
    uint64_t state_;
};

}  // namespace cliffsim

#endif
