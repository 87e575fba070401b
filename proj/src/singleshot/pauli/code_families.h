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

#ifndef _SINGLESHOT_PAULI_CODE_FAMILIES_H
#define _SINGLESHOT_PAULI_CODE_FAMILIES_H

#include "singleshot/pauli/subsystem_code.h"

namespace singleshot {

/// Bit-flip repetition code on n qubits with checks Z_i Z_{i+1}.
/// With `periodic` the chain closes into a ring and gains the check Z_{n-1} Z_0.
/// Logicals: X on every qubit, Z on qubit 0.
SubsystemCode repetition_code(size_t n, bool periodic);

struct LogicalStructure {
    /// Center elements of the gauge group not generated by the given stabilizers.
    std::vector<PauliOperator> extra_stabilizers;
    /// Conjugate pairs of bare logical operators.
    std::vector<PauliOperator> pairs;
};

/// Completes the stabilizers to the full center of the gauge group and finds logical pairs.
///
/// Candidates commute with every gauge generator and are independent modulo the
/// center; they are paired by symplectic Gram-Schmidt. For CSS generators every
/// extra stabilizer is X-type or Z-type and every pair is (X-type, Z-type).
LogicalStructure find_logical_structure(
    size_t n, const std::vector<PauliOperator> &stabs, const std::vector<PauliOperator> &gauges);

}  // namespace singleshot

#endif
