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


#include "singleshot/harness/analysis.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace singleshot {

std::vector<size_t> cluster_decompose(const BitVec &items, const std::vector<std::vector<uint32_t>> &adjacency) {
    if (items.size() != adjacency.size()) {
        throw std::invalid_argument("cluster_decompose: item set size does not match the adjacency.");
    }
    std::vector<bool> seen(items.size(), false);
    std::vector<size_t> out;
    std::vector<uint32_t> queue;
    for (size_t start : items.ones()) {
        if (seen[start]) {
            continue;
        }
        seen[start] = true;
        queue.assign(1, uint32_t(start));
        for (size_t h = 0; h < queue.size(); h++) {
            for (uint32_t w : adjacency[queue[h]]) {
                if (items[w] && !seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push_back(queue.size());
    }
    return out;
}

void ClusterStats::add_round(const std::vector<size_t> &cluster_sizes) {
    size_t largest = 0;
    for (size_t s : cluster_sizes) {
        histogram[s]++;
        largest = std::max(largest, s);
    }
    largest_per_round.push_back(largest);
}

uint64_t ClusterStats::num_clusters() const {
    uint64_t n = 0;
    for (const auto &[s, c] : histogram) {
        n += c;
    }
    return n;
}

uint64_t ClusterStats::total_size() const {
    uint64_t n = 0;
    for (const auto &[s, c] : histogram) {
        n += s * c;
    }
    return n;
}

size_t ClusterStats::largest_quantile(double q) const {
    if (!(q >= 0 && q <= 1)) {
        throw std::invalid_argument("largest_quantile: q must lie in [0,1].");
    }
    if (largest_per_round.empty()) {
        return 0;
    }
    std::vector<size_t> sorted = largest_per_round;
    std::sort(sorted.begin(), sorted.end());
    size_t rank = size_t(std::ceil(q * double(sorted.size())));
    return sorted[rank == 0 ? 0 : rank - 1];
}

ConfinementFit fit_confinement(const ClusterStats &stats, double z) {
    std::vector<double> x, y, w;
    for (const auto &[s, c] : stats.histogram) {
        if (s >= 2 && c > 0) {
            x.push_back(double(s));
            y.push_back(std::log(double(c)));
            w.push_back(double(c));
        }
    }
    ConfinementFit out;
    out.bins_used = x.size();
    if (x.size() < 2) {
        return out;
    }
    auto fit = weighted_least_squares(x, y, w);
    if (!fit.has_value()) {
        return out;
    }
    out.status = FitStatus::OK;
    out.upsilon = std::exp(fit->slope);
    out.ci = Interval{std::exp(fit->slope - z * fit->slope_stderr), std::exp(fit->slope + z * fit->slope_stderr)};
    out.unconfined = out.upsilon >= 1;
    return out;
}

SustainabilityReport sustainability_report(const std::vector<double> &per_round, double significance) {
    if (per_round.size() < 20) {
        throw std::invalid_argument("sustainability_report: needs at least 20 rounds.");
    }
    SustainabilityReport out;
    out.rounds = per_round.size();
    out.trend = mann_kendall(per_round, significance);
    out.drift = out.trend.drift;
    return out;
}

ConnectivityGrowth connectivity_growth(
    const std::vector<std::vector<uint32_t>> &adjacency, uint32_t root, size_t max_size) {
    if (root >= adjacency.size()) {
        throw std::invalid_argument("connectivity_growth: root out of range.");
    }
    ConnectivityGrowth out;
    out.counts.assign(max_size, 0);
    if (max_size == 0) {
        return out;
    }
    // Redelmeier: grow from an untried frontier; an item enters the frontier at most once
    // per branch, so each connected set containing the root is produced exactly once.
    std::vector<uint8_t> marked(adjacency.size(), 0);
    std::vector<uint32_t> in_set{root};
    marked[root] = 1;
    std::function<void(std::vector<uint32_t>)> grow = [&](std::vector<uint32_t> untried) {
        out.counts[in_set.size() - 1]++;
        if (in_set.size() == max_size) {
            return;
        }
        while (!untried.empty()) {
            uint32_t v = untried.back();
            untried.pop_back();
            std::vector<uint32_t> next = untried;
            std::vector<uint32_t> added;
            for (uint32_t w : adjacency[v]) {
                if (!marked[w]) {
                    marked[w] = 1;
                    added.push_back(w);
                    next.push_back(w);
                }
            }
            in_set.push_back(v);
            grow(next);
            in_set.pop_back();
            for (uint32_t w : added) {
                marked[w] = 0;
            }
        }
    };
    std::vector<uint32_t> start;
    for (uint32_t w : adjacency[root]) {
        if (!marked[w]) {
            marked[w] = 1;
            start.push_back(w);
        }
    }
    grow(start);
    for (size_t s = max_size; s >= 2; s--) {
        if (out.counts[s - 2] > 0 && out.counts[s - 1] > 0) {
            out.growth = double(out.counts[s - 1]) / double(out.counts[s - 2]);
            break;
        }
    }
    return out;
}

std::string fit_status_name(FitStatus s) {
    return s == FitStatus::OK ? "ok" : "insufficient_data";
}

}  // namespace singleshot
