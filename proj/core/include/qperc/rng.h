// Copyright 2026 The qperc Authors
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

#ifndef QPERC_RNG_H
#define QPERC_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace qperc {

/// Identifier written into every results file so runs can be reproduced.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64";

/// SplitMix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Child seed for work unit (entry, repetition) of a run seeded with
/// `master`. Chained SplitMix64 so neighbouring indices decorrelate.
constexpr uint64_t derive_seed(uint64_t master, uint64_t entry, uint64_t repetition) {
    uint64_t h = splitmix64(master);
    h = splitmix64(h ^ entry);
    h = splitmix64(h ^ (repetition + 0xD1B54A32D192ED03ULL));
    return h;
}

/// Seeded generator whose output is bit-identical on every platform.
///
/// The engine is std::mt19937_64 (fully specified by the standard). The
/// standard distributions are implementation-defined, so all derived draws
/// are computed here from raw 64-bit words.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection sampling, unbiased.
    uint64_t uniform_below(uint64_t bound);

    /// Standard normal via Box-Muller. Caches the second variate.
    double normal();

    bool bernoulli(double p) { return uniform() < p; }

   private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qperc

#endif
