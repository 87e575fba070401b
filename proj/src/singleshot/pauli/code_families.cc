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

#include "singleshot/pauli/code_families.h"

#include <algorithm>

namespace singleshot {

SubsystemCode repetition_code(size_t n, bool periodic) {
    if (n < 2) {
        throw std::invalid_argument("repetition_code needs at least 2 qubits.");
    }
    std::vector<PauliOperator> checks;
    for (size_t i = 0; i + 1 < n; i++) {
        checks.push_back(PauliOperator::z_on(n, {i, i + 1}));
    }
    if (periodic && n > 2) {
        checks.push_back(PauliOperator::z_on(n, {n - 1, 0}));
    }
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; i++) {
        all[i] = i;
    }
    std::vector<PauliOperator> logicals{PauliOperator::x_on(n, all), PauliOperator::z_on(n, {0})};
    return SubsystemCode(n, checks, checks, logicals);
}

namespace {

std::vector<PauliOperator> centralizer_basis(size_t n, const std::vector<PauliOperator> &gauges) {
    bool css = std::all_of(gauges.begin(), gauges.end(), [](const PauliOperator &g) {
        return g.is_x_type() || g.is_z_type();
    });
    std::vector<PauliOperator> out;
    if (css) {
        std::vector<BitVec> x_rows;
        std::vector<BitVec> z_rows;
        for (const auto &g : gauges) {
            if (g.is_identity()) {
                continue;
            }
            (g.is_x_type() ? x_rows.push_back(g.xs) : z_rows.push_back(g.zs));
        }
        for (auto &x : gf2_nullspace(z_rows, n)) {
            out.emplace_back(std::move(x), BitVec(n));
        }
        for (auto &z : gf2_nullspace(x_rows, n)) {
            out.emplace_back(BitVec(n), std::move(z));
        }
        return out;
    }
    std::vector<BitVec> rows;
    for (const auto &g : gauges) {
        rows.push_back(PauliOperator(g.zs, g.xs).symplectic());
    }
    for (auto &v : gf2_nullspace(rows, 2 * n)) {
        out.push_back(PauliOperator::from_symplectic(v));
    }
    return out;
}

}  // namespace

LogicalStructure find_logical_structure(
    size_t n, const std::vector<PauliOperator> &stabs, const std::vector<PauliOperator> &gauges) {
    auto candidates = centralizer_basis(n, gauges);
    bool css = std::all_of(candidates.begin(), candidates.end(), [](const PauliOperator &c) {
        return c.is_x_type() || c.is_z_type();
    });

    // Relations between gauge generators and candidates expose the center.
    Gf2Span joint(2 * n, gauges.size() + candidates.size());
    for (const auto &g : gauges) {
        joint.add(g.symplectic());
    }
    for (const auto &c : candidates) {
        joint.add(c.symplectic());
    }
    std::vector<PauliOperator> center;
    for (const auto &relation : joint.kernel()) {
        PauliOperator acc(n);
        for (size_t i = 0; i < candidates.size(); i++) {
            if (relation[gauges.size() + i]) {
                acc *= candidates[i];
            }
        }
        if (css) {
            center.emplace_back(acc.xs, BitVec(n));
            center.emplace_back(BitVec(n), acc.zs);
        } else {
            center.push_back(acc);
        }
    }

    LogicalStructure out;
    Gf2Span span(2 * n, stabs.size() + center.size() + candidates.size());
    for (const auto &s : stabs) {
        span.add(s.symplectic());
    }
    for (auto &c : center) {
        if (!c.is_identity() && span.add(c.symplectic())) {
            out.extra_stabilizers.push_back(std::move(c));
        }
    }
    std::vector<PauliOperator> pool;
    for (auto &c : candidates) {
        if (span.add(c.symplectic())) {
            pool.push_back(std::move(c));
        }
    }
    auto &pairs = out.pairs;
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        pool.erase(pool.begin());
        auto it = std::find_if(pool.begin(), pool.end(), [&](const PauliOperator &b) {
            return !commutes(a, b);
        });
        if (it == pool.end()) {
            throw std::invalid_argument("Logical candidate has no conjugate partner; stabilizers are incomplete.");
        }
        PauliOperator b = *it;
        pool.erase(it);
        for (auto &c : pool) {
            bool ca = !commutes(c, a);
            bool cb = !commutes(c, b);
            if (cb) {
                c *= a;
            }
            if (ca) {
                c *= b;
            }
        }
        pairs.push_back(std::move(a));
        pairs.push_back(std::move(b));
    }
    return out;
}

}  // namespace singleshot
