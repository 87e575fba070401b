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

#ifndef _SINGLESHOT_PAULI_SUBSYSTEM_CODE_H
#define _SINGLESHOT_PAULI_SUBSYSTEM_CODE_H

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "singleshot/pauli/gf2.h"
#include "singleshot/pauli/pauli_operator.h"

namespace singleshot {

/// Bits indexed by stabilizer generators.
using StabSyndrome = BitVec;
/// Bits indexed by gauge generators.
using GaugeSyndrome = BitVec;

/// Raised when an exhaustive computation would exceed its budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a correction table has no entry for a requested syndrome.
struct IncompleteTableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subsystem stabilizer code given by generator lists.
///
/// Logical representatives are stored as conjugate pairs: entries 2i and 2i+1
/// anticommute and commute with every other representative.
/// For stabilizer codes the gauge generators are just the stabilizer generators.
class SubsystemCode {
   public:
    SubsystemCode() = default;
    SubsystemCode(
        size_t n,
        std::vector<PauliOperator> stab_gens,
        std::vector<PauliOperator> gauge_gens,
        std::vector<PauliOperator> logical_reps,
        std::optional<size_t> distance = std::nullopt);

    size_t n() const {
        return n_;
    }
    const std::vector<PauliOperator> &stab_gens() const {
        return stab_gens_;
    }
    const std::vector<PauliOperator> &gauge_gens() const {
        return gauge_gens_;
    }
    const std::vector<PauliOperator> &logical_reps() const {
        return logical_reps_;
    }
    bool css() const {
        return css_;
    }
    const std::optional<size_t> &distance() const {
        return distance_;
    }
    size_t num_logical_qubits() const {
        return logical_reps_.size() / 2;
    }

    /// Checks every structural invariant; throws std::invalid_argument naming the first violation.
    void validate() const;

    /// Span of the syndromes of X_0..X_{n-1}, Z_0..Z_{n-1} (generator index q for X_q, n+q for Z_q).
    const Gf2Span &syndrome_span() const;
    /// Span of the gauge generators in symplectic form.
    const Gf2Span &gauge_span() const;
    /// Span of the stabilizer generators in symplectic form.
    const Gf2Span &stab_span() const;

   private:
    struct Cache;
    size_t n_ = 0;
    std::vector<PauliOperator> stab_gens_;
    std::vector<PauliOperator> gauge_gens_;
    std::vector<PauliOperator> logical_reps_;
    bool css_ = false;
    std::optional<size_t> distance_;
    std::shared_ptr<Cache> cache_;
};

StabSyndrome syndrome_of(const PauliOperator &e, const SubsystemCode &code);
GaugeSyndrome gauge_syndrome_of(const PauliOperator &e, const SubsystemCode &code);

/// True iff some Pauli error has syndrome s.
bool is_valid_syndrome(const StabSyndrome &s, const SubsystemCode &code);

/// The elimination-canonical error with syndrome s (built from lowest-index pivots).
/// Throws std::invalid_argument if s is not a valid syndrome.
PauliOperator canonical_correction(const StabSyndrome &s, const SubsystemCode &code);

/// Maps syndromes to corrections F(sigma) with syndrome_of(F(sigma)) = sigma.
///
/// Entries are produced on first request by the producer (default: canonical
/// elimination) and cached. A table without producer only knows explicit entries.
/// Lookups are thread safe.
class CorrectionTable {
   public:
    using Producer = std::function<PauliOperator(const StabSyndrome &)>;

    /// Table backed by canonical elimination.
    explicit CorrectionTable(const SubsystemCode &code);
    CorrectionTable(const SubsystemCode &code, Producer producer);
    /// Explicit-only table.
    static CorrectionTable explicit_only(const SubsystemCode &code);

    /// Adds an explicit entry; throws std::invalid_argument if its syndrome differs from sigma.
    void set(const StabSyndrome &sigma, const PauliOperator &correction);
    /// Throws IncompleteTableError if no entry exists and no producer is set.
    PauliOperator lookup(const StabSyndrome &sigma) const;
    size_t cached_entries() const;

   private:
    CorrectionTable() = default;
    SubsystemCode code_;
    Producer producer_;
    mutable std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
    mutable std::unordered_map<BitVec, PauliOperator, BitVecHash> entries_;
};

/// Builds a table whose entries are minimum-weight errors (first found in
/// lexicographic enumeration order) up to max_weight, for every reachable syndrome.
CorrectionTable build_min_weight_table(const SubsystemCode &code, size_t max_weight);

/// The representation E = F(sigma) * G * L.
struct ErrorDecomposition {
    PauliOperator corr;
    PauliOperator gauge_part;
    PauliOperator logical_part;
};

ErrorDecomposition decompose(const PauliOperator &e, const SubsystemCode &code, const CorrectionTable &table);

/// Which single-qubit Paulis the distance search may place on a qubit.
enum class ErrorBasis {
    ALL,
    X_ONLY,
    Z_ONLY,
};

/// Minimum weight of an operator commuting with all stabilizers but not in the gauge group.
/// Returns nullopt if no such operator has weight <= max_weight.
/// Throws ResourceError if the enumeration would exceed 1e8 candidates.
std::optional<size_t> code_distance_bruteforce(
    const SubsystemCode &code, size_t max_weight, ErrorBasis basis = ErrorBasis::ALL);

}  // namespace singleshot

#endif
