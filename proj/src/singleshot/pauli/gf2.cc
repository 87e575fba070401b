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

#include "singleshot/pauli/gf2.h"

#include <stdexcept>

namespace singleshot {

Gf2Span::Gf2Span(size_t vector_size, size_t max_generators)
    : vector_size_(vector_size), max_generators_(max_generators) {
}

BitVec Gf2Span::reduce(BitVec &target) const {
    if (target.size() != vector_size_) {
        throw std::invalid_argument("Gf2Span: target has the wrong length.");
    }
    BitVec combo(max_generators_);
    for (size_t r = 0; r < rows_.size(); r++) {
        if (target[pivots_[r]]) {
            target ^= rows_[r];
            combo ^= combos_[r];
        }
    }
    return combo;
}

bool Gf2Span::add(const BitVec &v) {
    if (num_generators_ >= max_generators_) {
        throw std::out_of_range("Gf2Span: generator capacity exceeded.");
    }
    BitVec residual = v;
    BitVec combo = reduce(residual);
    combo.flip(num_generators_);
    num_generators_++;
    size_t pivot = residual.first_one();
    if (pivot == residual.size()) {
        kernel_.push_back(std::move(combo));
        return false;
    }
    rows_.push_back(std::move(residual));
    combos_.push_back(std::move(combo));
    pivots_.push_back(pivot);
    return true;
}

bool Gf2Span::contains(const BitVec &target) const {
    BitVec residual = target;
    reduce(residual);
    return residual.none();
}

std::optional<BitVec> Gf2Span::solve(const BitVec &target) const {
    BitVec residual = target;
    BitVec combo = reduce(residual);
    if (residual.any()) {
        return std::nullopt;
    }
    return combo;
}

size_t gf2_rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Span span(rows[0].size(), rows.size());
    for (const auto &r : rows) {
        span.add(r);
    }
    return span.rank();
}

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t width) {
    std::vector<BitVec> m;
    m.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.size() != width) {
            throw std::invalid_argument("gf2_nullspace row width mismatch.");
        }
        m.push_back(r);
    }
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(width, false);
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < m.size(); col++) {
        size_t p = rank;
        while (p < m.size() && !m[p][col]) {
            p++;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[rank], m[p]);
        for (size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r][col]) {
                m[r] ^= m[rank];
            }
        }
        pivot_cols.push_back(col);
        is_pivot[col] = true;
        rank++;
    }
    std::vector<BitVec> basis;
    for (size_t free = 0; free < width; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(width);
        v.flip(free);
        for (size_t r = 0; r < rank; r++) {
            if (m[r][free]) {
                v.flip(pivot_cols[r]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace singleshot
