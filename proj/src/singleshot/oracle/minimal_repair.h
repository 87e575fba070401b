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

#ifndef _SINGLESHOT_ORACLE_MINIMAL_REPAIR_H
#define _SINGLESHOT_ORACLE_MINIMAL_REPAIR_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "singleshot/bits/bit_vec.h"
#include "singleshot/matching/t_join.h"

namespace singleshot {

/// Limits enforced before and during every exhaustive search.
struct OracleBudget {
    uint64_t max_search_nodes = 200'000'000;
    double max_seconds = 120;
};

struct OracleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimum-cardinality edge set whose per-node label sums equal `charge`.
/// Each edge carries a label in (Z_2)^8 (a bit mask); nodes in `absorbers` carry no charge.
/// Exact iterative-deepening branch and bound: always branch on the lowest charged node,
/// pruned by half the sum of each charged node's distance to its nearest partner.
/// Throws OracleBudgetError when the budget is exhausted.
BitVec enumerate_minimal_repair(
    const Graph &graph,
    const std::vector<uint8_t> &charge,
    const std::vector<uint8_t> &edge_labels,
    const std::vector<size_t> &absorbers,
    const OracleBudget &budget = {});

/// Parity special case: minimum edge set with odd-degree nodes `defects` (modulo absorbers).
BitVec enumerate_minimal_repair(
    const Graph &graph,
    const std::vector<size_t> &defects,
    const std::vector<size_t> &absorbers = {},
    const OracleBudget &budget = {});

}  // namespace singleshot

#endif
