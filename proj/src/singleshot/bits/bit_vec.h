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

#ifndef _SINGLESHOT_BITS_BIT_VEC_H
#define _SINGLESHOT_BITS_BIT_VEC_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace singleshot {

/// A fixed-length packed bit vector.
///
/// Bits past `size()` inside the last word are always zero, so word-level
/// comparisons and popcounts never need masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    static BitVec from_indices(size_t num_bits, const std::vector<size_t> &indices);
    /// Parses a string of '0' and '1' characters, index 0 first.
    static BitVec from_string(const std::string &bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const uint64_t *words() const {
        return words_.data();
    }
    uint64_t *words() {
        return words_.data();
    }

    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    /// Bounds-checked read.
    bool get(size_t k) const;
    void set(size_t k, bool value);
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear();

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    BitVec operator&(const BitVec &other) const;
    bool operator==(const BitVec &other) const;
    bool operator!=(const BitVec &other) const {
        return !(*this == other);
    }
    /// Lexicographic order on (size, words); used for canonical containers.
    bool operator<(const BitVec &other) const;

    size_t popcount() const;
    size_t and_popcount(const BitVec &other) const;
    /// Parity of the overlap with `other`.
    bool dot(const BitVec &other) const {
        return and_popcount(other) & 1;
    }
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Indices of set bits in increasing order.
    std::vector<size_t> ones() const;
    /// Index of the lowest set bit, or size() if none.
    size_t first_one() const;

    std::string str() const;
    size_t hash() const;

   private:
    void require_same_size(const BitVec &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        return v.hash();
    }
};

}  // namespace singleshot

#endif
