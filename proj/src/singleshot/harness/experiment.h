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


#ifndef _SINGLESHOT_HARNESS_EXPERIMENT_H
#define _SINGLESHOT_HARNESS_EXPERIMENT_H

#include <string>
#include <vector>

#include "singleshot/harness/analysis.h"
#include "singleshot/harness/config.h"

namespace singleshot {

/// One round of one trial.
struct TrialRow {
    CodeFamily family = CodeFamily::ISING_TORUS;
    size_t size = 0;
    double lambda = 0;
    double eta = 0;
    size_t trial = 0;
    size_t round = 0;
    size_t w = 0;
    size_t w0 = 0;
    size_t residual_weight = 0;
    size_t largest_cluster = 0;
    bool nonsyndrome = false;
    bool logical = false;
    std::vector<size_t> cluster_sizes;
};

/// Column order of trials.csv.
extern const char *const TRIALS_CSV_HEADER;

/// Runs every (size, lambda, eta) point of the grid in that nesting order. Trial t of
/// point p is seeded with trial_seed(seed, p * trials + t). Rows are ordered by point,
/// trial and round whatever the thread count. threads = 0 uses the hardware concurrency.
std::vector<TrialRow> run_experiment(const ExperimentConfig &config, size_t threads);

std::string write_trials_csv(const std::vector<TrialRow> &rows);
/// Throws std::invalid_argument naming the line of the first malformed row.
std::vector<TrialRow> parse_trials_csv(const std::string &text);

/// Vertex-sharing adjacency between the syndrome edges of a lattice.
std::vector<std::vector<uint32_t>> syndrome_adjacency(CodeFamily family, size_t size);

struct PointSummary {
    CodeFamily family;
    size_t size;
    double lambda;
    double eta;
    size_t trials = 0;
    size_t rounds = 0;
    /// Rounds that flip the logical class or raise a non-syndrome event.
    size_t failures = 0;
    size_t discards = 0;
    Interval failure_ci{0, 0};
    Interval discard_ci{0, 0};
    double mean_residual_weight = 0;
    ClusterStats clusters;
    ConfinementFit fit;
    /// Absent below 20 rounds per trial.
    std::optional<SustainabilityReport> sustainability;
    double failure_rate() const {
        return trials * rounds == 0 ? 0 : double(failures) / double(trials * rounds);
    }
    double discard_rate() const {
        return trials * rounds == 0 ? 0 : double(discards) / double(trials * rounds);
    }
};

/// Groups rows by point, in order of first appearance.
std::vector<PointSummary> summarize(const std::vector<TrialRow> &rows);

/// summary.json text. growth_max_size > 0 adds connected-set counts per lattice.
std::string summary_json(const std::vector<PointSummary> &points, size_t growth_max_size);

/// Writes the CSV, the summary and, when plots_dir is set, the SVG charts under out_dir.
void write_outputs(const ExperimentConfig &config, const std::vector<TrialRow> &rows, const std::string &out_dir);

/// Charts of failure rate against lambda (one series per size, one file per eta) and of
/// the cluster histogram of every point, keyed by file name.
std::vector<std::pair<std::string, std::string>> summary_charts(const std::vector<PointSummary> &points);

}  // namespace singleshot

#endif
