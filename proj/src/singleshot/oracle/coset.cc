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

#include "singleshot/oracle/coset.h"

#include <cstdint>
#include <vector>

namespace singleshot {

namespace {

using Row = std::vector<uint8_t>;

Row symplectic_row(const PauliOperator &p) {
    size_t n = p.num_qubits();
    Row r(2 * n);
    for (size_t q = 0; q < n; q++) {
        r[q] = p.xs[q];
        r[n + q] = p.zs[q];
    }
    return r;
}

// Plain row-reduction membership test, one byte per entry.
bool in_row_space(std::vector<Row> rows, Row target) {
    size_t cols = target.size();
    size_t rank = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t p = rank;
        while (p < rows.size() && !rows[p][c]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != rank && rows[i][c]) {
                for (size_t j = 0; j < cols; j++) {
                    rows[i][j] ^= rows[rank][j];
                }
            }
        }
        pivots.push_back(c);
        rank++;
    }
    for (size_t i = 0; i < rank; i++) {
        if (target[pivots[i]]) {
            for (size_t j = 0; j < cols; j++) {
                target[j] ^= rows[i][j];
            }
        }
    }
    for (uint8_t b : target) {
        if (b) {
            return false;
        }
    }
    return true;
}

bool anticommute(const Row &a, const Row &b) {
    size_t n = a.size() / 2;
    uint8_t s = 0;
    for (size_t q = 0; q < n; q++) {
        s ^= (a[q] & b[n + q]) ^ (a[n + q] & b[q]);
    }
    return s;
}

}  // namespace

std::string coset_class_name(CosetClass c) {
    switch (c) {
        case CosetClass::STABILIZER:
            return "stabilizer";
        case CosetClass::GAUGE:
            return "gauge";
        case CosetClass::LOGICAL:
            return "logical";
        default:
            return "detectable";
    }
}

CosetClass coset_check(const PauliOperator &e, const SubsystemCode &code) {
    if (code.n() > 2048) {
        throw OracleBudgetError("coset_check: code too large for dense elimination.");
    }
    if (e.num_qubits() != code.n()) {
        throw std::invalid_argument("coset_check: dimension mismatch.");
    }
    Row target = symplectic_row(e);
    std::vector<Row> stabs, gauges;
    for (const auto &s : code.stab_gens()) {
        stabs.push_back(symplectic_row(s));
        if (anticommute(stabs.back(), target)) {
            return CosetClass::DETECTABLE;
        }
    }
    for (const auto &g : code.gauge_gens()) {
        gauges.push_back(symplectic_row(g));
    }
    if (in_row_space(stabs, target)) {
        return CosetClass::STABILIZER;
    }
    if (in_row_space(gauges, target)) {
        return CosetClass::GAUGE;
    }
    return CosetClass::LOGICAL;
}

double exhaustive_fail(
    const SubsystemCode &code, const PauliChannel &channel, const CorrectionTable &table, size_t max_entries) {
    if (channel.mode() != ChannelMode::EXPLICIT) {
        throw std::invalid_argument("exhaustive_fail: explicit channel required.");
    }
    if (channel.entries().size() > max_entries) {
        throw OracleBudgetError("exhaustive_fail: channel has too many entries.");
    }
    double total = 0;
    double compensation = 0;
    for (const auto &entry : channel.entries()) {
        PauliOperator residual = table.lookup(syndrome_of(entry.error, code)) * entry.error;
        if (coset_check(residual, code) == CosetClass::LOGICAL) {
            double y = entry.probability - compensation;
            double t = total + y;
            compensation = (t - total) - y;
            total = t;
        }
    }
    return total;
}

}  // namespace singleshot
