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

#include "singleshot/noise/locality.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "singleshot/util/stats.h"

namespace singleshot {

namespace {

constexpr double kViolationPValue = 1e-7;

// ESU enumeration: every connected subset is produced exactly once, rooted at its minimum node.
void extend_subset(
    const Adjacency &adj,
    size_t max_size,
    size_t root,
    std::vector<size_t> &subset,
    std::vector<char> &in_closed_neighborhood,
    std::vector<size_t> extension,
    const std::function<void(const std::vector<size_t> &)> &visit) {
    visit(subset);
    if (subset.size() == max_size) {
        return;
    }
    while (!extension.empty()) {
        size_t w = extension.back();
        extension.pop_back();
        std::vector<size_t> next = extension;
        std::vector<size_t> newly_marked;
        for (size_t u : adj[w]) {
            if (u > root && !in_closed_neighborhood[u]) {
                next.push_back(u);
                in_closed_neighborhood[u] = 1;
                newly_marked.push_back(u);
            }
        }
        subset.push_back(w);
        extend_subset(adj, max_size, root, subset, in_closed_neighborhood, next, visit);
        subset.pop_back();
        for (size_t u : newly_marked) {
            in_closed_neighborhood[u] = 0;
        }
    }
}

}  // namespace

void for_each_connected_subset(
    const Adjacency &adjacency, size_t max_size, const std::function<void(const std::vector<size_t> &)> &visit) {
    if (max_size == 0) {
        return;
    }
    std::vector<char> marked(adjacency.size(), 0);
    for (size_t v = 0; v < adjacency.size(); v++) {
        std::vector<size_t> extension;
        marked[v] = 1;
        std::vector<size_t> newly_marked{v};
        for (size_t u : adjacency[v]) {
            if (u > v && !marked[u]) {
                extension.push_back(u);
                marked[u] = 1;
                newly_marked.push_back(u);
            }
        }
        std::vector<size_t> subset{v};
        extend_subset(adjacency, max_size, v, subset, marked, extension, visit);
        for (size_t u : newly_marked) {
            marked[u] = 0;
        }
    }
}

AlphaBoundReport check_alpha_bounded(
    const std::vector<BitVec> &samples, double alpha, size_t max_subset_size, const Adjacency &adjacency) {
    if (samples.empty()) {
        throw std::invalid_argument("check_alpha_bounded: no samples.");
    }
    if (max_subset_size > 4) {
        throw std::invalid_argument("check_alpha_bounded: subset size cap is 4.");
    }
    for (const auto &s : samples) {
        if (s.size() != adjacency.size()) {
            throw std::invalid_argument("check_alpha_bounded: sample length does not match adjacency.");
        }
    }
    AlphaBoundReport report;
    report.samples = samples.size();
    // Only samples touching a node can contain a subset through it.
    std::vector<std::vector<size_t>> samples_with(adjacency.size());
    for (size_t k = 0; k < samples.size(); k++) {
        for (size_t q : samples[k].ones()) {
            samples_with[q].push_back(k);
        }
    }
    for_each_connected_subset(adjacency, max_subset_size, [&](const std::vector<size_t> &subset) {
        report.subsets_tested++;
        size_t hits = 0;
        for (size_t k : samples_with[subset[0]]) {
            bool all = true;
            for (size_t j = 1; j < subset.size() && all; j++) {
                all = samples[k][subset[j]];
            }
            hits += all;
        }
        double bound = std::pow(alpha, (double)subset.size());
        double estimate = (double)hits / (double)samples.size();
        if (hits > 0 && bound > 0) {
            report.max_ratio = std::max(report.max_ratio, estimate / bound);
        }
        if (bound < 1 && binomial_upper_tail(hits, samples.size(), bound) < kViolationPValue) {
            std::vector<size_t> sorted = subset;
            std::sort(sorted.begin(), sorted.end());
            report.violations.push_back({sorted, estimate, bound});
        }
    });
    return report;
}

Adjacency chain_adjacency(size_t n, bool periodic) {
    Adjacency adj(n);
    for (size_t k = 0; k + 1 < n; k++) {
        adj[k].push_back(k + 1);
        adj[k + 1].push_back(k);
    }
    if (periodic && n > 2) {
        adj[n - 1].push_back(0);
        adj[0].push_back(n - 1);
    }
    return adj;
}

std::vector<BitVec> effective_recovery_channel(
    const RecoveryModel &model,
    size_t num_generators,
    const std::function<BitVec(const BitVec &)> &repair,
    size_t count,
    uint64_t seed) {
    if (!(model.eta >= 0 && model.eta <= 1)) {
        throw std::invalid_argument("RecoveryModel.eta must lie in [0, 1].");
    }
    std::vector<BitVec> out;
    out.reserve(count);
    for (size_t k = 0; k < count; k++) {
        Rng rng(trial_seed(seed, k));
        BitVec w = random_bits(num_generators, model.eta, rng);
        out.push_back(w ^ repair(w));
    }
    return out;
}

}  // namespace singleshot
