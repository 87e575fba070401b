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


#ifndef _SINGLESHOT_HARNESS_ANALYSIS_H
#define _SINGLESHOT_HARNESS_ANALYSIS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singleshot/bits/bit_vec.h"
#include "singleshot/util/stats.h"

namespace singleshot {

/// Sizes of the connected components of the set items, in order of their lowest item.
/// adjacency[i] lists the items touching item i.
std::vector<size_t> cluster_decompose(const BitVec &items, const std::vector<std::vector<uint32_t>> &adjacency);

/// Histogram of cluster sizes plus the largest cluster of every observed round.
struct ClusterStats {
    std::map<size_t, uint64_t> histogram;
    std::vector<size_t> largest_per_round;

    void add_round(const std::vector<size_t> &cluster_sizes);
    uint64_t num_clusters() const;
    uint64_t total_size() const;
    /// Nearest-rank quantile of the per-round largest cluster; 0 when no rounds were added.
    size_t largest_quantile(double q) const;
};

enum class FitStatus { OK, INSUFFICIENT_DATA };

struct ConfinementFit {
    FitStatus status = FitStatus::INSUFFICIENT_DATA;
    /// exp(slope) of log-count against size.
    double upsilon = 0;
    Interval ci{0, 0};
    /// Set exactly when upsilon >= 1.
    bool unconfined = false;
    size_t bins_used = 0;
};

/// Weighted least squares of log-count on size over the occupied bins of size at least 2,
/// weighted by count. The confidence interval is exp(slope +- z * stderr).
/// Fewer than two such bins gives INSUFFICIENT_DATA.
ConfinementFit fit_confinement(const ClusterStats &stats, double z = 1.96);

struct SustainabilityReport {
    size_t rounds = 0;
    MannKendallResult trend{};
    bool drift = false;
};

/// Mann-Kendall trend test on a per-round series. Needs at least 20 rounds.
SustainabilityReport sustainability_report(const std::vector<double> &per_round, double significance = 0.05);

struct ConnectivityGrowth {
    /// counts[s - 1] is the number of connected item sets of size s containing the root.
    std::vector<uint64_t> counts;
    /// counts[s] / counts[s - 1] at the largest size, or 0 below size 2.
    double growth = 0;
};

/// Counts connected subsets containing `root` up to max_size items by Redelmeier's method.
ConnectivityGrowth connectivity_growth(
    const std::vector<std::vector<uint32_t>> &adjacency, uint32_t root, size_t max_size);

std::string fit_status_name(FitStatus s);

}  // namespace singleshot

#endif
