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

#include "singleshot/matching/t_join.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "singleshot/matching/blossom.h"

namespace singleshot {

Graph::Graph(size_t num_nodes) : adjacency_(num_nodes) {
}

size_t Graph::add_edge(size_t u, size_t v, int64_t weight) {
    if (u >= num_nodes() || v >= num_nodes() || u == v) {
        throw std::invalid_argument("Graph::add_edge: bad endpoints.");
    }
    if (weight < 0) {
        throw std::invalid_argument("Graph::add_edge: negative weight.");
    }
    size_t k = ends_.size();
    ends_.push_back({u, v});
    weights_.push_back(weight);
    adjacency_[u].push_back({v, k});
    adjacency_[v].push_back({u, k});
    return k;
}

std::vector<size_t> Graph::odd_nodes(const BitVec &edge_set) const {
    if (edge_set.size() != num_edges()) {
        throw std::invalid_argument("Graph::odd_nodes: edge set size mismatch.");
    }
    std::vector<uint8_t> parity(num_nodes(), 0);
    for (size_t k : edge_set.ones()) {
        parity[ends_[k].first] ^= 1;
        parity[ends_[k].second] ^= 1;
    }
    std::vector<size_t> out;
    for (size_t v = 0; v < num_nodes(); v++) {
        if (parity[v]) {
            out.push_back(v);
        }
    }
    return out;
}

ShortestPaths shortest_paths(const Graph &graph, const std::vector<size_t> &sources) {
    ShortestPaths sp;
    sp.distance.assign(graph.num_nodes(), -1);
    sp.parent_edge.assign(graph.num_nodes(), -1);
    using Item = std::pair<int64_t, size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (size_t s : sources) {
        if (sp.distance.at(s) != 0) {
            sp.distance[s] = 0;
            heap.push({0, s});
        }
    }
    std::vector<bool> done(graph.num_nodes(), false);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (done[v]) {
            continue;
        }
        done[v] = true;
        for (auto [w, k] : graph.incident(v)) {
            int64_t nd = d + graph.weight(k);
            if (!done[w] && (sp.distance[w] < 0 || nd < sp.distance[w])) {
                sp.distance[w] = nd;
                sp.parent_edge[w] = (int64_t)k;
                heap.push({nd, w});
            }
        }
    }
    return sp;
}

std::vector<size_t> trace_path(const Graph &graph, const ShortestPaths &paths, size_t target) {
    if (paths.distance.at(target) < 0) {
        throw std::invalid_argument("trace_path: target unreachable.");
    }
    std::vector<size_t> out;
    size_t v = target;
    while (paths.parent_edge[v] >= 0) {
        size_t k = (size_t)paths.parent_edge[v];
        out.push_back(k);
        auto [a, b] = graph.ends(k);
        v = a == v ? b : a;
    }
    return out;
}

BitVec t_join(const Graph &graph, const std::vector<size_t> &terminals, const std::vector<size_t> &absorbers) {
    constexpr size_t kMaxTerminals = 2000;
    BitVec out(graph.num_edges());
    std::vector<size_t> t = terminals;
    std::sort(t.begin(), t.end());
    for (size_t k = 0; k + 1 < t.size(); k++) {
        if (t[k] == t[k + 1]) {
            throw std::invalid_argument("t_join: duplicate terminal.");
        }
    }
    std::vector<bool> is_absorber(graph.num_nodes(), false);
    for (size_t a : absorbers) {
        is_absorber.at(a) = true;
    }
    // Terminals that are themselves absorbers impose no constraint.
    t.erase(std::remove_if(t.begin(), t.end(), [&](size_t v) { return is_absorber.at(v); }), t.end());
    if (t.empty()) {
        return out;
    }
    if (t.size() > kMaxTerminals) {
        throw MatchingResourceError("t_join: " + std::to_string(t.size()) + " terminals exceeds the budget.");
    }
    size_t m = t.size();
    std::vector<ShortestPaths> from(m);
    for (size_t i = 0; i < m; i++) {
        from[i] = shortest_paths(graph, {t[i]});
    }
    bool has_boundary = !absorbers.empty();
    ShortestPaths to_boundary;
    if (has_boundary) {
        to_boundary = shortest_paths(graph, absorbers);
    }
    // Nodes 0..m-1 are terminals, m..2m-1 their boundary images.
    MatchGraph mg(has_boundary ? 2 * m : m);
    std::vector<std::pair<size_t, size_t>> pair_of_edge;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            int64_t d = from[i].distance[t[j]];
            if (d >= 0) {
                mg.add_edge(i, j, d);
                pair_of_edge.push_back({i, j});
            }
        }
    }
    if (has_boundary) {
        for (size_t i = 0; i < m; i++) {
            int64_t d = to_boundary.distance[t[i]];
            if (d >= 0) {
                mg.add_edge(i, m + i, d);
                pair_of_edge.push_back({i, m + i});
            }
            for (size_t j = i + 1; j < m; j++) {
                mg.add_edge(m + i, m + j, 0);
                pair_of_edge.push_back({m + i, m + j});
            }
        }
    } else if (m % 2) {
        throw InfeasibleMatchingError("t_join: odd number of terminals and no boundary.");
    }
    MatchResult match = mwpm(mg);
    for (size_t e : match.edge_indices) {
        auto [i, j] = pair_of_edge[e];
        if (i >= m) {
            continue;
        }
        const auto &path = j >= m ? trace_path(graph, to_boundary, t[i]) : trace_path(graph, from[i], t[j]);
        for (size_t k : path) {
            out.flip(k);
        }
    }
    return out;
}

}  // namespace singleshot
