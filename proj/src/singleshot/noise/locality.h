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

#ifndef _SINGLESHOT_NOISE_LOCALITY_H
#define _SINGLESHOT_NOISE_LOCALITY_H

#include <functional>
#include <vector>

#include "singleshot/bits/bit_vec.h"
#include "singleshot/util/rng.h"

namespace singleshot {

/// Per-qubit error intensity of a local noise model.
struct LocalNoiseModel {
    double lambda = 0;
};

/// Each generator measurement outcome flips independently with probability eta.
struct RecoveryModel {
    double eta = 0;
};

/// Bookkeeping for the noise-class parameters of a recovery analysis.
struct NoiseClassParams {
    double tau = 0;
    double epsilon = 0;
    double tau_prime = 0;
    double delta = 0;
};

/// Adjacency lists; node k is adjacent to adjacency[k].
using Adjacency = std::vector<std::vector<size_t>>;

/// Calls visit(subset) once for every connected node subset of size 1..max_size.
/// Subsets are passed sorted by enumeration order (the first node is the minimum).
void for_each_connected_subset(
    const Adjacency &adjacency, size_t max_size, const std::function<void(const std::vector<size_t> &)> &visit);

struct AlphaViolation {
    std::vector<size_t> subset;
    double estimate;
    double bound;
};

struct AlphaBoundReport {
    size_t subsets_tested = 0;
    size_t samples = 0;
    /// Largest estimate / alpha^|A| over tested subsets with nonzero estimate.
    double max_ratio = 0;
    std::vector<AlphaViolation> violations;
    bool ok() const {
        return violations.empty();
    }
};

/// Estimates p(A) = P(A subset of support) for every connected subset A of size <= max_subset_size
/// and flags those whose hit count has binomial upper-tail probability below 1e-7 under alpha^|A|.
/// Throws std::invalid_argument on an empty sample list or max_subset_size > 4.
AlphaBoundReport check_alpha_bounded(
    const std::vector<BitVec> &samples, double alpha, size_t max_subset_size, const Adjacency &adjacency);

/// Adjacency of a ring of n nodes (a path if !periodic).
Adjacency chain_adjacency(size_t n, bool periodic);

/// Samples the effective wrong syndrome w + repair(w) for `count` independently
/// drawn measurement-flip patterns over `num_generators` outcomes.
std::vector<BitVec> effective_recovery_channel(
    const RecoveryModel &model,
    size_t num_generators,
    const std::function<BitVec(const BitVec &)> &repair,
    size_t count,
    uint64_t seed);

}  // namespace singleshot

#endif
