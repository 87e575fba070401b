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

#include "singleshot/bits/kernels.h"

#include <atomic>
#include <bit>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#define SINGLESHOT_HAS_X86 1
#include <immintrin.h>
#else
#define SINGLESHOT_HAS_X86 0
#endif

namespace singleshot {

namespace {

void scalar_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] ^= src[k];
    }
}

void scalar_and_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] &= src[k];
    }
}

size_t scalar_popcount(const uint64_t *a, size_t n) {
    size_t t = 0;
    for (size_t k = 0; k < n; k++) {
        t += std::popcount(a[k]);
    }
    return t;
}

size_t scalar_and_popcount(const uint64_t *a, const uint64_t *b, size_t n) {
    size_t t = 0;
    for (size_t k = 0; k < n; k++) {
        t += std::popcount(a[k] & b[k]);
    }
    return t;
}

bool scalar_symplectic_parity(const uint64_t *a, const uint64_t *b, const uint64_t *c, const uint64_t *d, size_t n) {
    uint64_t acc = 0;
    for (size_t k = 0; k < n; k++) {
        acc ^= (a[k] & b[k]) ^ (c[k] & d[k]);
    }
    return std::popcount(acc) & 1;
}

bool scalar_any(const uint64_t *a, size_t n) {
    for (size_t k = 0; k < n; k++) {
        if (a[k]) {
            return true;
        }
    }
    return false;
}

constexpr BitKernels SCALAR{
    scalar_xor_into, scalar_and_into, scalar_popcount, scalar_and_popcount, scalar_symplectic_parity, scalar_any};

#if SINGLESHOT_HAS_X86

__attribute__((target("avx2"))) void avx2_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + k));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_xor_si256(x, y));
    }
    for (; k < n; k++) {
        dst[k] ^= src[k];
    }
}

__attribute__((target("avx2"))) void avx2_and_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + k));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_and_si256(x, y));
    }
    for (; k < n; k++) {
        dst[k] &= src[k];
    }
}

// Per-byte popcount by nibble table lookup, summed into 64-bit lanes.
__attribute__((target("avx2"))) inline __m256i avx2_popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0F);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline size_t avx2_sum_lanes(__m256i acc) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

__attribute__((target("avx2"))) size_t avx2_popcount(const uint64_t *a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        acc = _mm256_add_epi64(acc, avx2_popcount_lanes(x));
    }
    size_t t = avx2_sum_lanes(acc);
    for (; k < n; k++) {
        t += std::popcount(a[k]);
    }
    return t;
}

__attribute__((target("avx2"))) size_t avx2_and_popcount(const uint64_t *a, const uint64_t *b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + k));
        acc = _mm256_add_epi64(acc, avx2_popcount_lanes(_mm256_and_si256(x, y)));
    }
    size_t t = avx2_sum_lanes(acc);
    for (; k < n; k++) {
        t += std::popcount(a[k] & b[k]);
    }
    return t;
}

__attribute__((target("avx2"))) bool avx2_symplectic_parity(
    const uint64_t *a, const uint64_t *b, const uint64_t *c, const uint64_t *d, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + k));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(c + k));
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(d + k));
        acc = _mm256_xor_si256(acc, _mm256_xor_si256(_mm256_and_si256(va, vb), _mm256_and_si256(vc, vd)));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; k < n; k++) {
        folded ^= (a[k] & b[k]) ^ (c[k] & d[k]);
    }
    return std::popcount(folded) & 1;
}

__attribute__((target("avx2"))) bool avx2_any(const uint64_t *a, size_t n) {
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        if (!_mm256_testz_si256(x, x)) {
            return true;
        }
    }
    for (; k < n; k++) {
        if (a[k]) {
            return true;
        }
    }
    return false;
}

constexpr BitKernels AVX2{avx2_xor_into, avx2_and_into, avx2_popcount, avx2_and_popcount, avx2_symplectic_parity, avx2_any};

bool detect_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}

#else

bool detect_avx2() {
    return false;
}

#endif

std::atomic<const BitKernels *> &active_slot() {
    static std::atomic<const BitKernels *> slot{avx2_available() ? &avx2_kernels() : &SCALAR};
    return slot;
}

}  // namespace

const BitKernels &scalar_kernels() {
    return SCALAR;
}

bool avx2_available() {
    static const bool available = detect_avx2();
    return available;
}

const BitKernels &avx2_kernels() {
#if SINGLESHOT_HAS_X86
    if (avx2_available()) {
        return AVX2;
    }
#endif
    throw std::runtime_error("AVX2 kernels are not available on this machine.");
}

const BitKernels &active_kernels() {
    return *active_slot().load(std::memory_order_relaxed);
}

KernelMode active_kernel_mode() {
    return &active_kernels() == &SCALAR ? KernelMode::SCALAR : KernelMode::AVX2;
}

void set_kernel_mode(KernelMode mode) {
    if (mode == KernelMode::SCALAR) {
        active_slot().store(&SCALAR, std::memory_order_relaxed);
        return;
    }
    if (!avx2_available()) {
        throw std::invalid_argument("AVX2 kernel mode requested but not supported.");
    }
    active_slot().store(&avx2_kernels(), std::memory_order_relaxed);
}

}  // namespace singleshot
