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


#ifndef _SINGLESHOT_HARNESS_ORACLE_SUITE_H
#define _SINGLESHOT_HARNESS_ORACLE_SUITE_H

#include <cstdint>
#include <string>
#include <vector>

#include "singleshot/gauge/pipeline.h"

namespace singleshot {

/// Outcome of one cross-validation of a decoder component against an exact oracle.
struct OracleCheck {
    std::string name;
    size_t cases = 0;
    size_t mismatches = 0;
    /// Largest ratio of the component's output weight to the exact optimum.
    double worst_ratio = 0;
    bool passed = false;
    std::string detail;
};

/// Minimal closures of random Ising pseudo-syndromes on the L x L torus: |w0| <= |w| and
/// |w0| equal to the exhaustive optimum.
OracleCheck check_ising_closure(size_t L, size_t cases, uint64_t seed);

/// Each label class of the simplified flux repair against the exhaustive parity optimum.
OracleCheck check_label_t_joins(const GaugeDecoder &dec, size_t cases, uint64_t seed);

/// Gauge repair of every single flipped outcome against the exhaustive charge optimum.
OracleCheck check_single_outcome_repairs(const GaugeDecoder &dec);

/// Gauge repair of random flipped outcome sets of weight 1 to 4, per flux component,
/// against the exhaustive charge optimum; fails above ratio_bound.
OracleCheck check_repair_ratio(const GaugeDecoder &dec, size_t cases, double ratio_bound, uint64_t seed);

/// Decoding of flip sets of weight at most max_weight against the minimum-weight flip set
/// with the same syndrome, found by enumeration; fails above ratio_bound.
OracleCheck check_decode_ratio(const GaugeDecoder &dec, size_t max_weight, double ratio_bound, size_t cases, uint64_t seed);

/// Every single flip is decoded into the stabilizer or gauge coset.
OracleCheck check_single_flip_cosets(const GaugeDecoder &dec);

/// All checks on Ising L in {3,...,6} and tetrahedral d in {3, 5}.
std::vector<OracleCheck> run_oracle_suite(uint64_t seed, size_t cases);

}  // namespace singleshot

#endif
