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

#include "singleshot/util/rng.h"

#include <cmath>

namespace singleshot {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t base_seed, uint64_t index) {
    return splitmix64(base_seed ^ splitmix64(index));
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) {
        return 0;
    }
    // Rejection sampling keeps the result exactly uniform.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

void flip_random_bits(BitVec &out, double p, Rng &rng) {
    size_t n = out.size();
    if (p <= 0 || n == 0) {
        return;
    }
    if (p >= 1) {
        for (size_t k = 0; k < n; k++) {
            out.flip(k);
        }
        return;
    }
    if (p > 0.1) {
        for (size_t k = 0; k < n; k++) {
            if (rng.bernoulli(p)) {
                out.flip(k);
            }
        }
        return;
    }
    double log_q = std::log1p(-p);
    size_t k = 0;
    while (true) {
        double u = rng.uniform();
        double gap = std::floor(std::log1p(-u) / log_q);
        if (gap >= (double)(n - k)) {
            return;
        }
        k += (size_t)gap;
        out.flip(k);
        k++;
        if (k >= n) {
            return;
        }
    }
}

BitVec random_bits(size_t n, double p, Rng &rng) {
    BitVec v(n);
    flip_random_bits(v, p, rng);
    return v;
}

}  // namespace singleshot
