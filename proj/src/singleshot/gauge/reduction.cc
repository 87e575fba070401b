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


#include "singleshot/gauge/reduction.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <stdexcept>

#include "singleshot/matching/blossom.h"
#include "singleshot/pauli/gf2.h"
#include "singleshot/util/events.h"

namespace singleshot {

namespace {

std::vector<uint32_t> xor_sorted(std::vector<uint32_t> items) {
    std::sort(items.begin(), items.end());
    std::vector<uint32_t> out;
    for (size_t i = 0; i < items.size();) {
        size_t j = i;
        while (j < items.size() && items[j] == items[i]) {
            j++;
        }
        if ((j - i) & 1) {
            out.push_back(items[i]);
        }
        i = j;
    }
    return out;
}

constexpr size_t MAX_EXACT_LIFT = 4;
constexpr size_t MAX_EXACT_CANDIDATES = 400;

/// Smallest index set (at most max_weight entries) whose rows sum to target, by meet in the middle.
std::optional<std::vector<size_t>> min_weight_combination(
    const std::vector<BitVec> &rows, const BitVec &target, size_t max_weight) {
    size_t m = rows.size();
    if (target.none()) {
        return std::vector<size_t>{};
    }
    if (m > MAX_EXACT_CANDIDATES) {
        return std::nullopt;
    }
    std::unordered_map<BitVec, size_t, BitVecHash> singles;
    for (size_t i = 0; i < m; i++) {
        singles.emplace(rows[i], i);
    }
    if (auto it = singles.find(target); it != singles.end()) {
        return std::vector<size_t>{it->second};
    }
    if (max_weight < 2) {
        return std::nullopt;
    }
    std::unordered_map<BitVec, std::pair<size_t, size_t>, BitVecHash> pairs;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            pairs.emplace(rows[i] ^ rows[j], std::pair<size_t, size_t>{i, j});
        }
    }
    if (auto it = pairs.find(target); it != pairs.end()) {
        return std::vector<size_t>{it->second.first, it->second.second};
    }
    if (max_weight < 3) {
        return std::nullopt;
    }
    for (size_t i = 0; i < m; i++) {
        auto it = pairs.find(target ^ rows[i]);
        if (it != pairs.end() && it->second.first != i && it->second.second != i) {
            return std::vector<size_t>{i, it->second.first, it->second.second};
        }
    }
    if (max_weight < 4) {
        return std::nullopt;
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            auto it = pairs.find(target ^ rows[i] ^ rows[j]);
            if (it == pairs.end()) {
                continue;
            }
            auto [k, l] = it->second;
            if (k != i && k != j && l != i && l != j) {
                return std::vector<size_t>{i, j, k, l};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

MatchingReduction::MatchingReduction(ReductionInput input)
    : name_(std::move(input.name)),
      label_names_(std::move(input.label_names)),
      adjacency_(std::move(input.vertex_adjacency)),
      elementary_vertices_(std::move(input.elementary_vertices)),
      max_lift_radius_(input.max_lift_radius),
      weights_(input.weights) {
    size_t num_vertices = adjacency_.size();
    if (input.elementary_bits.size() != elementary_vertices_.size()) {
        throw std::invalid_argument("Elementary error tables have different sizes.");
    }
    std::map<ReductionNode, uint32_t> node_index;
    for (const auto &list : input.bit_nodes) {
        for (const auto &n : list) {
            if (n.vertex >= num_vertices) {
                throw std::invalid_argument("Reduction node vertex out of range.");
            }
            node_index.emplace(n, 0);
        }
    }
    for (auto &[n, id] : node_index) {
        id = uint32_t(nodes_.size());
        nodes_.push_back(n);
    }
    for (const auto &list : input.bit_nodes) {
        std::vector<uint32_t> ids;
        for (const auto &n : list) {
            ids.push_back(node_index.at(n));
        }
        bit_nodes_.push_back(xor_sorted(ids));
    }
    vertex_elementary_.resize(num_vertices);
    for (size_t x = 0; x < elementary_vertices_.size(); x++) {
        std::vector<uint32_t> ids;
        for (uint32_t bit : input.elementary_bits[x]) {
            if (bit >= bit_nodes_.size()) {
                throw std::invalid_argument("Elementary syndrome bit out of range.");
            }
            ids.insert(ids.end(), bit_nodes_[bit].begin(), bit_nodes_[bit].end());
        }
        elementary_nodes_.push_back(xor_sorted(ids));
        for (uint32_t v : elementary_vertices_[x]) {
            if (v >= num_vertices) {
                throw std::invalid_argument("Elementary error vertex out of range.");
            }
            vertex_elementary_[v].push_back(uint32_t(x));
        }
    }

    uint32_t bnd = uint32_t(boundary());
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> edge_index;
    auto find_edge = [&](uint32_t a, uint32_t b) -> int64_t {
        auto it = edge_index.find({a, b});
        return it == edge_index.end() ? -1 : int64_t(it->second);
    };
    auto add_edge = [&](uint32_t a, uint32_t b, std::vector<uint32_t> lift) {
        uint32_t id = uint32_t(edges_.size());
        edges_.push_back(ReductionEdge{a, b, std::move(lift)});
        edge_index[{a, b}] = id;
        return id;
    };
    auto vertex_distance = [&](uint32_t s, uint32_t t) {
        if (s == t) {
            return size_t{0};
        }
        std::vector<size_t> dist(num_vertices, SIZE_MAX);
        std::vector<uint32_t> queue{s};
        dist[s] = 0;
        for (size_t h = 0; h < queue.size(); h++) {
            for (uint32_t w : adjacency_[queue[h]]) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[queue[h]] + 1;
                    if (w == t) {
                        return dist[w];
                    }
                    queue.push_back(w);
                }
            }
        }
        return SIZE_MAX;
    };

    std::map<std::pair<uint32_t, uint32_t>, std::optional<std::vector<uint32_t>>> lift_cache;
    auto pair_cost = [&](uint32_t a, uint32_t b) -> size_t {
        int64_t existing = find_edge(a, b);
        if (existing >= 0) {
            return edges_[existing].lift.size();
        }
        auto it = lift_cache.find({a, b});
        if (it == lift_cache.end()) {
            std::vector<uint32_t> targets{a};
            if (b != bnd) {
                targets.push_back(b);
            }
            it = lift_cache.emplace(std::pair{a, b}, lift_nodes(targets)).first;
        }
        return it->second.has_value() ? it->second->size() : SIZE_MAX;
    };

    split_.resize(elementary_nodes_.size());
    for (size_t x = 0; x < elementary_nodes_.size(); x++) {
        const auto &ns = elementary_nodes_[x];
        std::map<uint8_t, std::vector<uint32_t>> by_label;
        for (uint32_t k : ns) {
            by_label[nodes_[k].label].push_back(k);
        }
        std::vector<std::pair<uint32_t, uint32_t>> parts;
        std::vector<uint32_t> leftovers;
        for (auto &[label, group] : by_label) {
            while (group.size() >= 2) {
                uint32_t a = group.front();
                size_t best = 1;
                size_t best_dist = SIZE_MAX;
                for (size_t i = 1; i < group.size(); i++) {
                    size_t d = vertex_distance(nodes_[a].vertex, nodes_[group[i]].vertex);
                    if (d < best_dist) {
                        best_dist = d;
                        best = i;
                    }
                }
                parts.emplace_back(a, group[best]);
                group.erase(group.begin() + best);
                group.erase(group.begin());
            }
            if (!group.empty()) {
                leftovers.push_back(group.front());
            }
        }
        std::vector<std::vector<std::pair<uint32_t, uint32_t>>> groupings;
        std::vector<std::pair<uint32_t, uint32_t>> current;
        std::vector<bool> used(leftovers.size(), false);
        std::function<void()> enumerate = [&]() {
            size_t i = 0;
            while (i < leftovers.size() && used[i]) {
                i++;
            }
            if (i == leftovers.size()) {
                groupings.push_back(current);
                return;
            }
            used[i] = true;
            current.emplace_back(leftovers[i], bnd);
            enumerate();
            current.pop_back();
            for (size_t j = i + 1; j < leftovers.size(); j++) {
                if (!used[j]) {
                    used[j] = true;
                    current.emplace_back(std::min(leftovers[i], leftovers[j]), std::max(leftovers[i], leftovers[j]));
                    enumerate();
                    current.pop_back();
                    used[j] = false;
                }
            }
            used[i] = false;
        };
        enumerate();
        size_t best_cost = SIZE_MAX;
        size_t best_blocks = SIZE_MAX;
        std::vector<std::pair<uint32_t, uint32_t>> best;
        for (const auto &g : groupings) {
            size_t cost = 0;
            if (parts.size() + g.size() == 1) {
                cost = 1;
            } else {
                for (const auto &[u, w] : g) {
                    size_t c = pair_cost(u, w);
                    cost = c == SIZE_MAX ? SIZE_MAX : cost + c;
                    if (cost == SIZE_MAX) {
                        break;
                    }
                }
            }
            if (cost < best_cost || (cost == best_cost && cost != SIZE_MAX && g.size() < best_blocks)) {
                best_cost = cost;
                best_blocks = g.size();
                best = g;
            }
        }
        if (best_cost == SIZE_MAX) {
            throw std::logic_error("Reduction '" + name_ + "': elementary error " + std::to_string(x) +
                                   " has nodes that can neither be paired nor absorbed.");
        }
        parts.insert(parts.end(), best.begin(), best.end());
        for (auto [a, b] : parts) {
            if (a > b) {
                std::swap(a, b);
            }
            int64_t existing = find_edge(a, b);
            if (parts.size() == 1) {
                if (existing < 0) {
                    existing = add_edge(a, b, {uint32_t(x)});
                } else if (edges_[existing].lift.size() > 1) {
                    edges_[existing].lift = {uint32_t(x)};
                }
            } else if (existing < 0) {
                if (pair_cost(a, b) == SIZE_MAX) {
                    throw std::logic_error("Reduction '" + name_ + "': no local lift for a derived edge of elementary error " +
                                           std::to_string(x) + ".");
                }
                existing = add_edge(a, b, *lift_cache.at({a, b}));
            }
            split_[x].push_back(uint32_t(existing));
        }
        std::sort(split_[x].begin(), split_[x].end());
    }

    for (const auto &s : split_) {
        max_split_ = std::max(max_split_, s.size());
    }
    for (uint32_t x = 0; x < split_.size(); x++) {
        if (split_[x].size() > 0) {
            contraction_order_.push_back(x);
        }
    }
    std::stable_sort(contraction_order_.begin(), contraction_order_.end(), [&](uint32_t p, uint32_t q) {
        return split_[p].size() > split_[q].size();
    });
    int64_t scale = 1;
    for (size_t k = 1; k <= max_split_; k++) {
        scale = std::lcm(scale, int64_t(k));
    }
    std::vector<int64_t> shared(edges_.size(), scale);
    for (const auto &s : split_) {
        for (uint32_t e : s) {
            shared[e] = std::min(shared[e], scale / int64_t(s.size()));
        }
    }
    lift_graph_ = Graph(nodes_.size() + 1);
    shared_graph_ = Graph(nodes_.size() + 1);
    for (size_t e = 0; e < edges_.size(); e++) {
        lift_graph_.add_edge(edges_[e].a, edges_[e].b, int64_t(edges_[e].lift.size()));
        shared_graph_.add_edge(edges_[e].a, edges_[e].b, shared[e]);
        max_lift_ = std::max(max_lift_, edges_[e].lift.size());
    }
}

std::optional<std::vector<uint32_t>> MatchingReduction::lift_nodes(const std::vector<uint32_t> &targets) const {
    size_t n = nodes_.size();
    BitVec target(n);
    for (uint32_t k : targets) {
        target.flip(k);
    }
    std::vector<size_t> dist(adjacency_.size(), SIZE_MAX);
    std::vector<uint32_t> frontier;
    for (uint32_t k : targets) {
        uint32_t v = nodes_[k].vertex;
        if (dist[v] == SIZE_MAX) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    }
    std::vector<uint32_t> reached = frontier;
    std::optional<std::vector<uint32_t>> fallback;
    size_t last_count = 0;
    for (size_t radius = 0; radius <= max_lift_radius_; radius++) {
        if (radius > 0) {
            std::vector<uint32_t> next;
            for (uint32_t v : frontier) {
                for (uint32_t w : adjacency_[v]) {
                    if (dist[w] == SIZE_MAX) {
                        dist[w] = radius;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
            reached.insert(reached.end(), frontier.begin(), frontier.end());
        }
        std::vector<uint32_t> candidates;
        for (uint32_t v : reached) {
            candidates.insert(candidates.end(), vertex_elementary_[v].begin(), vertex_elementary_[v].end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.size() == last_count) {
            continue;
        }
        last_count = candidates.size();
        std::vector<BitVec> rows;
        Gf2Span span(n, candidates.size());
        for (uint32_t x : candidates) {
            BitVec row(n);
            for (uint32_t k : elementary_nodes_[x]) {
                row.flip(k);
            }
            span.add(row);
            rows.push_back(std::move(row));
        }
        auto combo = span.solve(target);
        if (!combo.has_value()) {
            continue;
        }
        if (auto exact = min_weight_combination(rows, target, MAX_EXACT_LIFT); exact.has_value()) {
            std::vector<uint32_t> out;
            for (size_t i : *exact) {
                out.push_back(candidates[i]);
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        if (!fallback.has_value()) {
            BitVec sol = *combo;
            bool improved = true;
            while (improved) {
                improved = false;
                for (const auto &k : span.kernel()) {
                    if ((sol ^ k).popcount() < sol.popcount()) {
                        sol ^= k;
                        improved = true;
                    }
                }
            }
            fallback.emplace();
            for (size_t i : sol.ones()) {
                fallback->push_back(candidates[i]);
            }
        }
    }
    return fallback;
}

BitVec MatchingReduction::nodes_of_bits(const BitVec &bits) const {
    if (bits.size() != bit_nodes_.size()) {
        throw std::invalid_argument("Syndrome size does not match the reduction.");
    }
    BitVec out(nodes_.size());
    for (size_t b : bits.ones()) {
        for (uint32_t k : bit_nodes_[b]) {
            out.flip(k);
        }
    }
    return out;
}

BitVec MatchingReduction::nodes_of_elementary(const BitVec &elementary) const {
    if (elementary.size() != elementary_nodes_.size()) {
        throw std::invalid_argument("Error set size does not match the reduction.");
    }
    BitVec out(nodes_.size());
    for (size_t x : elementary.ones()) {
        for (uint32_t k : elementary_nodes_[x]) {
            out.flip(k);
        }
    }
    return out;
}

BitVec MatchingReduction::edge_nodes(size_t e) const {
    BitVec out(nodes_.size());
    out.flip(edges_.at(e).a);
    if (edges_[e].b != boundary()) {
        out.flip(edges_[e].b);
    }
    return out;
}

BitVec MatchingReduction::solve(const BitVec &bits) const {
    if (weights_ != ReductionInput::Weights::LIGHTER_OF_BOTH) {
        return solve_with(bits, weights_);
    }
    BitVec shared = solve_with(bits, ReductionInput::Weights::SHARED);
    BitVec by_lift = solve_with(bits, ReductionInput::Weights::LIFT_SIZE);
    return by_lift.popcount() < shared.popcount() ? by_lift : shared;
}

BitVec MatchingReduction::solve_with(const BitVec &bits, ReductionInput::Weights weights) const {
    if (weights == ReductionInput::Weights::LIGHTER_OF_BOTH) {
        return solve(bits);
    }
    const Graph &graph = weights == ReductionInput::Weights::SHARED ? shared_graph_ : lift_graph_;
    BitVec result(elementary_nodes_.size());
    std::vector<size_t> defects = nodes_of_bits(bits).ones();
    if (defects.empty()) {
        return result;
    }
    BitVec chosen(edges_.size());
    try {
        chosen = t_join(graph, defects, {boundary()});
    } catch (const InfeasibleMatchingError &ex) {
        throw NonSyndromeEvent("Reduction '" + name_ + "' found no matching: " + ex.what());
    }
    for (uint32_t x : contraction_order_) {
        const auto &s = split_[x];
        if (s.empty() || !std::all_of(s.begin(), s.end(), [&](uint32_t e) { return chosen[e]; })) {
            continue;
        }
        for (uint32_t e : s) {
            chosen.flip(e);
        }
        result.flip(x);
    }
    for (size_t e : chosen.ones()) {
        for (uint32_t x : edges_[e].lift) {
            result.flip(x);
        }
    }
    return result;
}

std::string MatchingReduction::export_text() const {
    std::ostringstream out;
    out << "# reduction " << name_ << '\n';
    out << "nodes=" << nodes_.size() << " edges=" << edges_.size() << " max_split=" << max_split_
        << " max_lift=" << max_lift_ << '\n';
    out << "[NODE]\n";
    for (size_t k = 0; k < nodes_.size(); k++) {
        uint8_t label = nodes_[k].label;
        out << k << ' ' << nodes_[k].vertex << ' '
            << (label < label_names_.size() ? label_names_[label] : std::to_string(label)) << '\n';
    }
    out << "[EDGE] id a b lift_weight shared_weight\n";
    for (size_t e = 0; e < edges_.size(); e++) {
        out << e << ' ' << edges_[e].a << ' ';
        if (edges_[e].b == boundary()) {
            out << '-';
        } else {
            out << edges_[e].b;
        }
        out << ' ' << lift_graph_.weight(e) << ' ' << shared_graph_.weight(e) << '\n';
    }
    out << "[LIFT]\n";
    for (size_t e = 0; e < edges_.size(); e++) {
        out << e;
        for (size_t i = 0; i < edges_[e].lift.size(); i++) {
            out << (i ? ',' : ' ') << edges_[e].lift[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace singleshot
