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

#ifndef _SINGLESHOT_PAULI_GF2_H
#define _SINGLESHOT_PAULI_GF2_H

#include <optional>
#include <vector>

#include "singleshot/bits/bit_vec.h"

namespace singleshot {

/// Incremental span membership over GF(2) with solution certificates.
///
/// Generators are added one at a time. Each generator is reduced against the
/// current basis and, if independent, becomes a new basis row pivoted on its
/// lowest remaining set bit. Every basis row remembers which generators it is
/// a combination of, so `solve` can return coefficients.
class Gf2Span {
   public:
    Gf2Span(size_t vector_size, size_t max_generators);

    /// Adds a generator; returns true if it increased the rank.
    bool add(const BitVec &v);

    size_t rank() const {
        return rows_.size();
    }
    size_t num_generators() const {
        return num_generators_;
    }
    size_t vector_size() const {
        return vector_size_;
    }

    bool contains(const BitVec &target) const;

    /// Coefficients c (over the generators added so far) with sum c_i v_i = target.
    std::optional<BitVec> solve(const BitVec &target) const;

    /// Reduces target in place and returns the combination used.
    BitVec reduce(BitVec &target) const;

    /// Combinations of generators that sum to zero, one per dependent generator.
    const std::vector<BitVec> &kernel() const {
        return kernel_;
    }

   private:
    size_t vector_size_;
    size_t max_generators_;
    size_t num_generators_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    std::vector<size_t> pivots_;
    std::vector<BitVec> kernel_;
};

/// Rank of a list of equally sized vectors.
size_t gf2_rank(const std::vector<BitVec> &rows);

/// Basis of {v : r.v = 0 for every row r}, with vectors of the given width.
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t width);

}  // namespace singleshot

#endif
