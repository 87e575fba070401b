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

#include "singleshot/bits/bit_vec.h"

#include <bit>
#include <stdexcept>

#include "singleshot/bits/kernels.h"

namespace singleshot {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) >> 6, 0) {
}

BitVec BitVec::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVec result(num_bits);
    for (size_t k : indices) {
        if (k >= num_bits) {
            throw std::out_of_range("Bit index " + std::to_string(k) + " out of range for size " + std::to_string(num_bits));
        }
        result.flip(k);
    }
    return result;
}

BitVec BitVec::from_string(const std::string &bits) {
    BitVec result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.flip(k);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("Bit strings may only contain '0' and '1'.");
        }
    }
    return result;
}

bool BitVec::get(size_t k) const {
    if (k >= num_bits_) {
        throw std::out_of_range("Bit index " + std::to_string(k) + " out of range for size " + std::to_string(num_bits_));
    }
    return (*this)[k];
}

void BitVec::set(size_t k, bool value) {
    if (k >= num_bits_) {
        throw std::out_of_range("Bit index " + std::to_string(k) + " out of range for size " + std::to_string(num_bits_));
    }
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
        words_[k >> 6] |= mask;
    } else {
        words_[k >> 6] &= ~mask;
    }
}

void BitVec::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

void BitVec::require_same_size(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument(
            "Bit vector size mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(other);
    active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(other);
    active_kernels().and_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec result = *this;
    result ^= other;
    return result;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec result = *this;
    result &= other;
    return result;
}

bool BitVec::operator==(const BitVec &other) const {
    return num_bits_ == other.num_bits_ && words_ == other.words_;
}

bool BitVec::operator<(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    return words_ < other.words_;
}

size_t BitVec::popcount() const {
    return active_kernels().popcount(words_.data(), words_.size());
}

size_t BitVec::and_popcount(const BitVec &other) const {
    require_same_size(other);
    return active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
}

bool BitVec::any() const {
    return active_kernels().any(words_.data(), words_.size());
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> result;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t v = words_[w];
        while (v) {
            result.push_back((w << 6) + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return result;
}

size_t BitVec::first_one() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return (w << 6) + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

std::string BitVec::str() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if ((*this)[k]) {
            result[k] = '1';
        }
    }
    return result;
}

size_t BitVec::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL ^ num_bits_;
    for (uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

}  // namespace singleshot
