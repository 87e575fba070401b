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

#ifndef _SINGLESHOT_MATCHING_BLOSSOM_H
#define _SINGLESHOT_MATCHING_BLOSSOM_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace singleshot {

/// Raised when no matching covers every required node.
struct InfeasibleMatchingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a matching instance exceeds the node budget.
struct MatchingResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightedEdge {
    size_t u;
    size_t v;
    int64_t weight;
};

/// Maximum-weight matching by the O(n^3) primal-dual blossom method.
/// Returns mate[v] (or -1). If max_cardinality, the result has maximum cardinality
/// and maximum weight among those.
std::vector<int64_t> max_weight_matching(
    size_t num_nodes, const std::vector<WeightedEdge> &edges, bool max_cardinality);

/// Nodes with nonnegative integer edge weights; boundary nodes may stay unmatched.
class MatchGraph {
   public:
    explicit MatchGraph(size_t num_nodes);
    size_t num_nodes() const {
        return boundary_.size();
    }
    /// Throws std::invalid_argument on negative weight, self-loop or out-of-range node.
    size_t add_edge(size_t u, size_t v, int64_t weight);
    void set_boundary(size_t node, bool is_boundary = true);
    bool is_boundary(size_t node) const {
        return boundary_.at(node);
    }
    const std::vector<WeightedEdge> &edges() const {
        return edges_;
    }

   private:
    std::vector<bool> boundary_;
    std::vector<WeightedEdge> edges_;
};

struct MatchResult {
    /// mate[v] is the partner of v, or -1 for an unmatched boundary node.
    std::vector<int64_t> mate;
    /// Indices into MatchGraph::edges() of the chosen edges, ascending.
    std::vector<size_t> edge_indices;
    int64_t weight = 0;
};

/// Exact minimum-weight matching covering every non-boundary node.
/// Among parallel edges the lowest-index minimum-weight one is used.
/// Throws InfeasibleMatchingError if no such matching exists.
MatchResult mwpm(const MatchGraph &graph);

}  // namespace singleshot

#endif
