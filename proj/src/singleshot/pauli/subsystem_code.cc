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

#include "singleshot/pauli/subsystem_code.h"

#include <cmath>
#include <functional>

namespace singleshot {

struct SubsystemCode::Cache {
    std::once_flag syndrome_once;
    std::once_flag gauge_once;
    std::once_flag stab_once;
    std::unique_ptr<Gf2Span> syndrome;
    std::unique_ptr<Gf2Span> gauge;
    std::unique_ptr<Gf2Span> stab;
};

SubsystemCode::SubsystemCode(
    size_t n,
    std::vector<PauliOperator> stab_gens,
    std::vector<PauliOperator> gauge_gens,
    std::vector<PauliOperator> logical_reps,
    std::optional<size_t> distance)
    : n_(n),
      stab_gens_(std::move(stab_gens)),
      gauge_gens_(std::move(gauge_gens)),
      logical_reps_(std::move(logical_reps)),
      distance_(distance),
      cache_(std::make_shared<Cache>()) {
    if (logical_reps_.size() % 2) {
        throw std::invalid_argument("Logical representatives must come in conjugate pairs.");
    }
    css_ = true;
    for (const auto *list : {&stab_gens_, &gauge_gens_, &logical_reps_}) {
        for (const auto &p : *list) {
            if (p.num_qubits() != n_) {
                throw std::invalid_argument("Generator qubit count does not match code size.");
            }
        }
    }
    for (const auto *list : {&stab_gens_, &gauge_gens_}) {
        for (const auto &p : *list) {
            if (!p.is_x_type() && !p.is_z_type()) {
                css_ = false;
            }
        }
    }
}

void SubsystemCode::validate() const {
    for (size_t i = 0; i < stab_gens_.size(); i++) {
        for (size_t j = 0; j < gauge_gens_.size(); j++) {
            if (!commutes(stab_gens_[i], gauge_gens_[j])) {
                throw std::invalid_argument(
                    "Stabilizer " + std::to_string(i) + " anticommutes with gauge generator " + std::to_string(j) + ".");
            }
        }
        for (size_t j = 0; j < logical_reps_.size(); j++) {
            if (!commutes(stab_gens_[i], logical_reps_[j])) {
                throw std::invalid_argument(
                    "Stabilizer " + std::to_string(i) + " anticommutes with logical " + std::to_string(j) + ".");
            }
        }
        if (!gauge_span().contains(stab_gens_[i].symplectic())) {
            throw std::invalid_argument("Stabilizer " + std::to_string(i) + " is not a product of gauge generators.");
        }
    }
    for (size_t i = 0; i < logical_reps_.size(); i++) {
        for (size_t j = 0; j < gauge_gens_.size(); j++) {
            if (!commutes(logical_reps_[i], gauge_gens_[j])) {
                throw std::invalid_argument(
                    "Logical " + std::to_string(i) + " anticommutes with gauge generator " + std::to_string(j) + ".");
            }
        }
        for (size_t j = i + 1; j < logical_reps_.size(); j++) {
            bool should_anticommute = (i % 2 == 0) && j == i + 1;
            if (commutes(logical_reps_[i], logical_reps_[j]) == should_anticommute) {
                throw std::invalid_argument(
                    "Logicals " + std::to_string(i) + " and " + std::to_string(j) + " violate the conjugate pairing.");
            }
        }
    }
}

const Gf2Span &SubsystemCode::syndrome_span() const {
    std::call_once(cache_->syndrome_once, [&]() {
        auto span = std::make_unique<Gf2Span>(stab_gens_.size(), 2 * n_);
        for (size_t q = 0; q < n_; q++) {
            span->add(syndrome_of(PauliOperator::single(n_, q, 'X'), *this));
        }
        for (size_t q = 0; q < n_; q++) {
            span->add(syndrome_of(PauliOperator::single(n_, q, 'Z'), *this));
        }
        cache_->syndrome = std::move(span);
    });
    return *cache_->syndrome;
}

const Gf2Span &SubsystemCode::gauge_span() const {
    std::call_once(cache_->gauge_once, [&]() {
        auto span = std::make_unique<Gf2Span>(2 * n_, gauge_gens_.size());
        for (const auto &g : gauge_gens_) {
            span->add(g.symplectic());
        }
        cache_->gauge = std::move(span);
    });
    return *cache_->gauge;
}

const Gf2Span &SubsystemCode::stab_span() const {
    std::call_once(cache_->stab_once, [&]() {
        auto span = std::make_unique<Gf2Span>(2 * n_, stab_gens_.size());
        for (const auto &s : stab_gens_) {
            span->add(s.symplectic());
        }
        cache_->stab = std::move(span);
    });
    return *cache_->stab;
}

StabSyndrome syndrome_of(const PauliOperator &e, const SubsystemCode &code) {
    if (e.num_qubits() != code.n()) {
        throw std::invalid_argument("syndrome_of: error size does not match code.");
    }
    StabSyndrome result(code.stab_gens().size());
    for (size_t i = 0; i < code.stab_gens().size(); i++) {
        if (!commutes(e, code.stab_gens()[i])) {
            result.flip(i);
        }
    }
    return result;
}

GaugeSyndrome gauge_syndrome_of(const PauliOperator &e, const SubsystemCode &code) {
    if (e.num_qubits() != code.n()) {
        throw std::invalid_argument("gauge_syndrome_of: error size does not match code.");
    }
    GaugeSyndrome result(code.gauge_gens().size());
    for (size_t i = 0; i < code.gauge_gens().size(); i++) {
        if (!commutes(e, code.gauge_gens()[i])) {
            result.flip(i);
        }
    }
    return result;
}

bool is_valid_syndrome(const StabSyndrome &s, const SubsystemCode &code) {
    if (s.size() != code.stab_gens().size()) {
        throw std::invalid_argument("is_valid_syndrome: syndrome size does not match code.");
    }
    return code.syndrome_span().contains(s);
}

PauliOperator canonical_correction(const StabSyndrome &s, const SubsystemCode &code) {
    auto combo = code.syndrome_span().solve(s);
    if (!combo.has_value()) {
        throw std::invalid_argument("canonical_correction: not a valid syndrome.");
    }
    size_t n = code.n();
    PauliOperator result(n);
    for (size_t k : combo->ones()) {
        if (k < n) {
            result.xs.flip(k);
        } else {
            result.zs.flip(k - n);
        }
    }
    return result;
}

CorrectionTable::CorrectionTable(const SubsystemCode &code)
    : CorrectionTable(code, [code](const StabSyndrome &s) {
          return canonical_correction(s, code);
      }) {
}

CorrectionTable::CorrectionTable(const SubsystemCode &code, Producer producer)
    : code_(code), producer_(std::move(producer)) {
}

CorrectionTable CorrectionTable::explicit_only(const SubsystemCode &code) {
    CorrectionTable table;
    table.code_ = code;
    return table;
}

void CorrectionTable::set(const StabSyndrome &sigma, const PauliOperator &correction) {
    if (syndrome_of(correction, code_) != sigma) {
        throw std::invalid_argument("CorrectionTable::set: correction does not have the given syndrome.");
    }
    std::lock_guard<std::mutex> lock(*mutex_);
    entries_.insert_or_assign(sigma, correction);
}

PauliOperator CorrectionTable::lookup(const StabSyndrome &sigma) const {
    {
        std::lock_guard<std::mutex> lock(*mutex_);
        auto it = entries_.find(sigma);
        if (it != entries_.end()) {
            return it->second;
        }
    }
    if (!producer_) {
        throw IncompleteTableError("Correction table has no entry for syndrome " + sigma.str() + ".");
    }
    PauliOperator produced = producer_(sigma);
    if (syndrome_of(produced, code_) != sigma) {
        throw std::logic_error("Correction producer returned an operator with the wrong syndrome.");
    }
    std::lock_guard<std::mutex> lock(*mutex_);
    return entries_.emplace(sigma, std::move(produced)).first->second;
}

size_t CorrectionTable::cached_entries() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return entries_.size();
}

namespace {

double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    double r = 1;
    for (size_t i = 0; i < k; i++) {
        r = r * (double)(n - i) / (double)(i + 1);
    }
    return r;
}

std::vector<char> basis_letters(ErrorBasis basis) {
    switch (basis) {
        case ErrorBasis::X_ONLY:
            return {'X'};
        case ErrorBasis::Z_ONLY:
            return {'Z'};
        default:
            return {'X', 'Y', 'Z'};
    }
}

/// Visits every Pauli of weight exactly w (supports in lexicographic order, letters in basis order).
/// The visitor returns false to stop early.
template <typename Visitor>
bool for_each_weight(size_t n, size_t w, const std::vector<char> &letters, Visitor &&visit) {
    PauliOperator current(n);
    std::function<bool(size_t, size_t)> rec = [&](size_t depth, size_t start) -> bool {
        if (depth == w) {
            return visit(current);
        }
        for (size_t q = start; q + (w - depth) <= n; q++) {
            for (char c : letters) {
                PauliOperator single = PauliOperator::single(n, q, c);
                current *= single;
                bool keep_going = rec(depth + 1, q + 1);
                current *= single;
                if (!keep_going) {
                    return false;
                }
            }
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

CorrectionTable build_min_weight_table(const SubsystemCode &code, size_t max_weight) {
    CorrectionTable table = CorrectionTable::explicit_only(code);
    std::unordered_map<BitVec, bool, BitVecHash> seen;
    auto letters = basis_letters(ErrorBasis::ALL);
    double budget = 0;
    for (size_t w = 0; w <= max_weight; w++) {
        budget += binomial(code.n(), w) * std::pow(3.0, (double)w);
    }
    if (budget > 1e8) {
        throw ResourceError("build_min_weight_table: enumeration budget exceeded.");
    }
    for (size_t w = 0; w <= max_weight; w++) {
        for_each_weight(code.n(), w, letters, [&](const PauliOperator &e) {
            StabSyndrome s = syndrome_of(e, code);
            if (seen.emplace(s, true).second) {
                table.set(s, e);
            }
            return true;
        });
    }
    return table;
}

ErrorDecomposition decompose(const PauliOperator &e, const SubsystemCode &code, const CorrectionTable &table) {
    StabSyndrome sigma = syndrome_of(e, code);
    ErrorDecomposition result;
    result.corr = table.lookup(sigma);
    PauliOperator rest = e * result.corr;
    PauliOperator logical(code.n());
    const auto &reps = code.logical_reps();
    for (size_t i = 0; i + 1 < reps.size(); i += 2) {
        // rest contains reps[i] iff it anticommutes with its conjugate reps[i+1].
        if (!commutes(rest, reps[i + 1])) {
            logical *= reps[i];
        }
        if (!commutes(rest, reps[i])) {
            logical *= reps[i + 1];
        }
    }
    result.logical_part = logical;
    result.gauge_part = rest * logical;
    if (!code.gauge_span().contains(result.gauge_part.symplectic())) {
        throw std::logic_error("decompose: remainder is not in the gauge group; logical representatives are incomplete.");
    }
    return result;
}

std::optional<size_t> code_distance_bruteforce(const SubsystemCode &code, size_t max_weight, ErrorBasis basis) {
    auto letters = basis_letters(basis);
    double total = 0;
    for (size_t w = 1; w <= max_weight; w++) {
        total += binomial(code.n(), w) * std::pow((double)letters.size(), (double)w);
    }
    if (total > 1e8) {
        throw ResourceError("code_distance_bruteforce: enumeration budget exceeded.");
    }
    const Gf2Span &gauge = code.gauge_span();
    for (size_t w = 1; w <= max_weight; w++) {
        bool found = false;
        for_each_weight(code.n(), w, letters, [&](const PauliOperator &e) {
            for (const auto &s : code.stab_gens()) {
                if (!commutes(e, s)) {
                    return true;
                }
            }
            if (!gauge.contains(e.symplectic())) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace singleshot
