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

#ifndef _SINGLESHOT_BITS_KERNELS_H
#define _SINGLESHOT_BITS_KERNELS_H

#include <cstddef>
#include <cstdint>

namespace singleshot {

/// Word-parallel primitives over packed bit arrays.
///
/// Every kernel exists as a portable scalar reference and, when the compiler
/// supports it, an AVX2 variant. The active variant is picked once at load time
/// from the CPU feature flags and can be overridden for testing.
struct BitKernels {
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t num_words);
    void (*and_into)(uint64_t *dst, const uint64_t *src, size_t num_words);
    size_t (*popcount)(const uint64_t *a, size_t num_words);
    size_t (*and_popcount)(const uint64_t *a, const uint64_t *b, size_t num_words);
    /// Parity of popcount(a & b) XOR popcount(c & d); the symplectic product.
    bool (*symplectic_parity)(const uint64_t *a, const uint64_t *b, const uint64_t *c, const uint64_t *d, size_t num_words);
    bool (*any)(const uint64_t *a, size_t num_words);
};

enum class KernelMode {
    SCALAR,
    AVX2,
};

/// The scalar reference kernels.
const BitKernels &scalar_kernels();

/// The AVX2 kernels. Throws std::runtime_error if unavailable on this build or CPU.
const BitKernels &avx2_kernels();

/// True if the AVX2 kernels were compiled in and the running CPU supports them.
bool avx2_available();

/// The kernels currently used by BitVec operations.
const BitKernels &active_kernels();

KernelMode active_kernel_mode();

/// Overrides runtime dispatch. Throws std::invalid_argument if the mode is unavailable.
void set_kernel_mode(KernelMode mode);

}  // namespace singleshot

#endif
