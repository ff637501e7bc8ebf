/**************************************************************************
 * rng.hpp
 *
 * Copyright 2026 the tgrs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>

namespace tgrs {

// Deterministic counter-addressable randomness. Every consumer derives its own
// stream from (root seed, phase tag, counter), so a trial's draws do not depend
// on how many threads ran before it or in which order.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    static Rng stream(std::uint64_t root, std::uint64_t phase, std::uint64_t counter) {
        std::uint64_t s = mix(root + 0x632be59bd9b4e019ULL);
        s = mix(s ^ mix(phase + 0xbf58476d1ce4e5b9ULL));
        s = mix(s ^ mix(counter + 0x94d049bb133111ebULL));
        return Rng(s);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in [0, n), unbiased by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % n;
        }
    }

   private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

// Phase tags for derived streams; fixed constants keep outputs reproducible
// across builds.
namespace phase {
constexpr std::uint64_t kKeygen = 1;
constexpr std::uint64_t kEncrypt = 2;
constexpr std::uint64_t kDistinguish = 3;
constexpr std::uint64_t kTriple = 4;
constexpr std::uint64_t kExtend = 5;
constexpr std::uint64_t kShorten = 6;
constexpr std::uint64_t kCensus = 7;
constexpr std::uint64_t kVerify = 8;
constexpr std::uint64_t kTest = 100;
}  // namespace phase

}  // namespace tgrs
