// Copyright 2026 The Singleshot Authors
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

#ifndef _SINGLESHOT_UTIL_RNG_H
#define _SINGLESHOT_UTIL_RNG_H

#include <cstdint>
#include <random>

#include "singleshot/bits/bit_vec.h"

namespace singleshot {

/// The SplitMix64 finalizer applied to x + 0x9E3779B97F4A7C15.
uint64_t splitmix64(uint64_t x);

/// Seed of trial `index` under `base_seed`.
///
/// Each trial gets splitmix64(base_seed ^ splitmix64(index)), so seeds depend
/// only on (base_seed, index) and never on scheduling.
uint64_t trial_seed(uint64_t base_seed, uint64_t index);

/// Deterministic random source.
///
/// The engine is std::mt19937_64 (fully specified by the standard); all
/// conversions to floating point and Bernoulli draws are done here rather than
/// with <random> distributions, whose outputs vary between library vendors.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return (double)(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }
    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n);

   private:
    std::mt19937_64 engine_;
};

/// Flips each bit of `out` independently with probability p.
/// Uses geometric gap sampling when p is small.
void flip_random_bits(BitVec &out, double p, Rng &rng);

/// A fresh vector of n independent Bernoulli(p) bits.
BitVec random_bits(size_t n, double p, Rng &rng);

}  // namespace singleshot

#endif
