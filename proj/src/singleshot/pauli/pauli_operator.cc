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

#include "singleshot/pauli/pauli_operator.h"

#include <stdexcept>

#include "singleshot/bits/kernels.h"

namespace singleshot {

PauliOperator::PauliOperator(BitVec x_bits, BitVec z_bits) : xs(std::move(x_bits)), zs(std::move(z_bits)) {
    if (xs.size() != zs.size()) {
        throw std::invalid_argument("PauliOperator: X and Z parts have different lengths.");
    }
}

PauliOperator PauliOperator::from_string(const std::string &text) {
    PauliOperator result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.xs.flip(k);
                break;
            case 'Z':
                result.zs.flip(k);
                break;
            case 'Y':
                result.xs.flip(k);
                result.zs.flip(k);
                break;
            default:
                throw std::invalid_argument(std::string("Unrecognized Pauli character '") + text[k] + "'.");
        }
    }
    return result;
}

PauliOperator PauliOperator::x_on(size_t n, const std::vector<size_t> &qubits) {
    return PauliOperator(BitVec::from_indices(n, qubits), BitVec(n));
}

PauliOperator PauliOperator::z_on(size_t n, const std::vector<size_t> &qubits) {
    return PauliOperator(BitVec(n), BitVec::from_indices(n, qubits));
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char kind) {
    PauliOperator result(n);
    if (qubit >= n) {
        throw std::out_of_range("Qubit index out of range.");
    }
    if (kind == 'X' || kind == 'Y') {
        result.xs.flip(qubit);
    }
    if (kind == 'Z' || kind == 'Y') {
        result.zs.flip(qubit);
    }
    if (kind != 'X' && kind != 'Y' && kind != 'Z') {
        throw std::invalid_argument("Single-qubit Pauli kind must be X, Y or Z.");
    }
    return result;
}

BitVec PauliOperator::support() const {
    BitVec result = xs;
    for (size_t w = 0; w < result.num_words(); w++) {
        result.words()[w] |= zs.words()[w];
    }
    return result;
}

size_t PauliOperator::weight() const {
    return support().popcount();
}

char PauliOperator::at(size_t qubit) const {
    bool x = xs.get(qubit);
    bool z = zs.get(qubit);
    return "IZXY"[(x << 1) | z];
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    xs ^= other.xs;
    zs ^= other.zs;
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    PauliOperator result = *this;
    result *= other;
    return result;
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (xs != other.xs) {
        return xs < other.xs;
    }
    return zs < other.zs;
}

std::string PauliOperator::str() const {
    std::string result(num_qubits(), 'I');
    for (size_t k = 0; k < num_qubits(); k++) {
        result[k] = at(k);
    }
    return result;
}

BitVec PauliOperator::symplectic() const {
    size_t n = num_qubits();
    BitVec result(2 * n);
    for (size_t k : xs.ones()) {
        result.flip(k);
    }
    for (size_t k : zs.ones()) {
        result.flip(n + k);
    }
    return result;
}

PauliOperator PauliOperator::from_symplectic(const BitVec &v) {
    if (v.size() % 2) {
        throw std::invalid_argument("Symplectic vectors have even length.");
    }
    size_t n = v.size() / 2;
    PauliOperator result(n);
    for (size_t k : v.ones()) {
        if (k < n) {
            result.xs.flip(k);
        } else {
            result.zs.flip(k - n);
        }
    }
    return result;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "commutes: qubit count mismatch (" + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()) + ").");
    }
    return !active_kernels().symplectic_parity(
        p.xs.words(), q.zs.words(), p.zs.words(), q.xs.words(), p.xs.num_words());
}

}  // namespace singleshot
