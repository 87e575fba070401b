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

#ifndef _SINGLESHOT_PAULI_PAULI_OPERATOR_H
#define _SINGLESHOT_PAULI_PAULI_OPERATOR_H

#include <string>
#include <vector>

#include "singleshot/bits/bit_vec.h"

namespace singleshot {

/// A Pauli operator on n qubits modulo global phase, in binary symplectic form.
///
/// Qubit k carries X if xs[k] and not zs[k], Z if zs[k] and not xs[k], and Y if both.
struct PauliOperator {
    BitVec xs;
    BitVec zs;

    PauliOperator() = default;
    explicit PauliOperator(size_t n) : xs(n), zs(n) {
    }
    PauliOperator(BitVec x_bits, BitVec z_bits);

    /// Parses a dense string like "XIZY" ('_' is accepted for identity).
    static PauliOperator from_string(const std::string &text);
    static PauliOperator x_on(size_t n, const std::vector<size_t> &qubits);
    static PauliOperator z_on(size_t n, const std::vector<size_t> &qubits);
    /// Single-qubit Pauli; `kind` is one of 'X', 'Y', 'Z'.
    static PauliOperator single(size_t n, size_t qubit, char kind);

    size_t num_qubits() const {
        return xs.size();
    }
    BitVec support() const;
    size_t weight() const;
    bool is_identity() const {
        return xs.none() && zs.none();
    }
    bool is_x_type() const {
        return zs.none();
    }
    bool is_z_type() const {
        return xs.none();
    }
    char at(size_t qubit) const;

    /// Multiplication modulo phase (XOR of both parts).
    PauliOperator &operator*=(const PauliOperator &other);
    PauliOperator operator*(const PauliOperator &other) const;
    bool operator==(const PauliOperator &other) const {
        return xs == other.xs && zs == other.zs;
    }
    bool operator!=(const PauliOperator &other) const {
        return !(*this == other);
    }
    bool operator<(const PauliOperator &other) const;

    std::string str() const;
    /// Concatenated bit vector [xs | zs] of length 2n.
    BitVec symplectic() const;
    static PauliOperator from_symplectic(const BitVec &v);
};

/// True iff the symplectic product of p and q vanishes.
/// Throws std::invalid_argument on a qubit-count mismatch.
bool commutes(const PauliOperator &p, const PauliOperator &q);

}  // namespace singleshot

#endif
