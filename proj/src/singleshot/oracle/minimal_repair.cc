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

#include "singleshot/oracle/minimal_repair.h"

#include <chrono>
#include <deque>
#include <limits>

namespace singleshot {

namespace {

class RepairSearch {
   public:
    RepairSearch(
        const Graph &graph,
        const std::vector<uint8_t> &charge,
        const std::vector<uint8_t> &labels,
        const std::vector<size_t> &absorbers,
        const OracleBudget &budget)
        : graph_(graph),
          charge_(charge),
          labels_(labels),
          absorber_(graph.num_nodes(), false),
          budget_(budget),
          used_(graph.num_edges(), false),
          start_(std::chrono::steady_clock::now()) {
        for (size_t a : absorbers) {
            absorber_.at(a) = true;
        }
        for (size_t v = 0; v < graph.num_nodes(); v++) {
            if (absorber_[v]) {
                charge_[v] = 0;
            }
        }
        // All-pairs hop distances by breadth-first search.
        size_t n = graph.num_nodes();
        hops_.assign(n, std::vector<int>(n, -1));
        for (size_t s = 0; s < n; s++) {
            std::deque<size_t> q{s};
            hops_[s][s] = 0;
            while (!q.empty()) {
                size_t v = q.front();
                q.pop_front();
                for (auto [w, k] : graph.incident(v)) {
                    (void)k;
                    if (hops_[s][w] < 0) {
                        hops_[s][w] = hops_[s][v] + 1;
                        q.push_back(w);
                    }
                }
            }
        }
    }

    BitVec solve() {
        for (size_t limit = 0;; limit++) {
            if (limit > graph_.num_edges()) {
                throw OracleBudgetError("enumerate_minimal_repair: no repair exists.");
            }
            if (search(limit)) {
                BitVec out(graph_.num_edges());
                for (size_t k : chosen_) {
                    out.flip(k);
                }
                return out;
            }
        }
    }

   private:
    int lower_bound() const {
        int total = 0;
        std::vector<size_t> charged;
        for (size_t v = 0; v < charge_.size(); v++) {
            if (charge_[v]) {
                charged.push_back(v);
            }
        }
        for (size_t v : charged) {
            int best = std::numeric_limits<int>::max();
            for (size_t w : charged) {
                if (w != v && hops_[v][w] >= 0) {
                    best = std::min(best, hops_[v][w]);
                }
            }
            for (size_t a = 0; a < absorber_.size(); a++) {
                if (absorber_[a] && hops_[v][a] >= 0) {
                    best = std::min(best, hops_[v][a]);
                }
            }
            if (best == std::numeric_limits<int>::max()) {
                return std::numeric_limits<int>::max() / 4;
            }
            total += best;
        }
        return (total + 1) / 2;
    }

    bool search(size_t remaining) {
        if (++visited_ > budget_.max_search_nodes) {
            throw OracleBudgetError("enumerate_minimal_repair: search node budget exhausted.");
        }
        if ((visited_ & 0xFFFF) == 0) {
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (secs > budget_.max_seconds) {
                throw OracleBudgetError("enumerate_minimal_repair: time budget exhausted.");
            }
        }
        size_t v = 0;
        while (v < charge_.size() && !charge_[v]) {
            v++;
        }
        if (v == charge_.size()) {
            return true;
        }
        if ((size_t)lower_bound() > remaining) {
            return false;
        }
        for (auto [w, k] : graph_.incident(v)) {
            if (used_[k]) {
                continue;
            }
            used_[k] = true;
            chosen_.push_back(k);
            charge_[v] ^= labels_[k];
            if (!absorber_[w]) {
                charge_[w] ^= labels_[k];
            }
            bool found = search(remaining - 1);
            if (found) {
                return true;
            }
            charge_[v] ^= labels_[k];
            if (!absorber_[w]) {
                charge_[w] ^= labels_[k];
            }
            chosen_.pop_back();
            used_[k] = false;
        }
        return false;
    }

    const Graph &graph_;
    std::vector<uint8_t> charge_;
    const std::vector<uint8_t> &labels_;
    std::vector<bool> absorber_;
    OracleBudget budget_;
    std::vector<bool> used_;
    std::vector<size_t> chosen_;
    std::vector<std::vector<int>> hops_;
    uint64_t visited_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

BitVec enumerate_minimal_repair(
    const Graph &graph,
    const std::vector<uint8_t> &charge,
    const std::vector<uint8_t> &edge_labels,
    const std::vector<size_t> &absorbers,
    const OracleBudget &budget) {
    if (charge.size() != graph.num_nodes() || edge_labels.size() != graph.num_edges()) {
        throw std::invalid_argument("enumerate_minimal_repair: size mismatch.");
    }
    if (graph.num_nodes() > 5000) {
        throw OracleBudgetError("enumerate_minimal_repair: graph too large for all-pairs distances.");
    }
    RepairSearch search(graph, charge, edge_labels, absorbers, budget);
    return search.solve();
}

BitVec enumerate_minimal_repair(
    const Graph &graph,
    const std::vector<size_t> &defects,
    const std::vector<size_t> &absorbers,
    const OracleBudget &budget) {
    std::vector<uint8_t> charge(graph.num_nodes(), 0);
    for (size_t d : defects) {
        charge.at(d) ^= 1;
    }
    return enumerate_minimal_repair(graph, charge, std::vector<uint8_t>(graph.num_edges(), 1), absorbers, budget);
}

}  // namespace singleshot
