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

#ifndef _SINGLESHOT_MATCHING_T_JOIN_H
#define _SINGLESHOT_MATCHING_T_JOIN_H

#include <cstdint>
#include <vector>

#include "singleshot/bits/bit_vec.h"

namespace singleshot {

/// Undirected multigraph with nonnegative integer edge weights.
class Graph {
   public:
    explicit Graph(size_t num_nodes);
    size_t num_nodes() const {
        return adjacency_.size();
    }
    size_t num_edges() const {
        return ends_.size();
    }
    size_t add_edge(size_t u, size_t v, int64_t weight = 1);
    std::pair<size_t, size_t> ends(size_t edge) const {
        return ends_[edge];
    }
    int64_t weight(size_t edge) const {
        return weights_[edge];
    }
    /// (neighbor, edge index) pairs in insertion order.
    const std::vector<std::pair<size_t, size_t>> &incident(size_t node) const {
        return adjacency_[node];
    }
    /// Nodes of odd degree in the given edge subset.
    std::vector<size_t> odd_nodes(const BitVec &edge_set) const;

   private:
    std::vector<std::vector<std::pair<size_t, size_t>>> adjacency_;
    std::vector<std::pair<size_t, size_t>> ends_;
    std::vector<int64_t> weights_;
};

/// Single-source shortest paths; ties keep the first relaxation in adjacency order.
struct ShortestPaths {
    std::vector<int64_t> distance;  // -1 if unreachable
    std::vector<int64_t> parent_edge;
};
ShortestPaths shortest_paths(const Graph &graph, const std::vector<size_t> &sources);

/// Edges of the recorded shortest path from a source to `target`.
std::vector<size_t> trace_path(const Graph &graph, const ShortestPaths &paths, size_t target);

/// Minimum-weight edge set whose odd-degree nodes are exactly `terminals`, ignoring the
/// parity at `absorbers` (boundary nodes). Built from exact matching over shortest paths.
/// Throws InfeasibleMatchingError on parity or connectivity failure and
/// MatchingResourceError above 2000 terminals.
BitVec t_join(const Graph &graph, const std::vector<size_t> &terminals, const std::vector<size_t> &absorbers = {});

}  // namespace singleshot

#endif
