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


#ifndef _SINGLESHOT_GAUGE_REDUCTION_H
#define _SINGLESHOT_GAUGE_REDUCTION_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singleshot/bits/bit_vec.h"
#include "singleshot/matching/t_join.h"

namespace singleshot {

/// A matching node: a charge component carried by a dual vertex.
struct ReductionNode {
    uint32_t vertex;
    uint8_t label;
    bool operator==(const ReductionNode &other) const = default;
    auto operator<=>(const ReductionNode &other) const = default;
};

/// Everything a reduction needs to know about a decoding problem.
///
/// Elementary errors have syndromes over a set of bits; each bit is mapped onto
/// a set of matching nodes. The composite map from elementary errors to node sets
/// must be local: every node of an elementary error sits near the error's vertices.
struct ReductionInput {
    std::string name;
    std::vector<std::vector<uint32_t>> vertex_adjacency;
    std::vector<std::vector<uint32_t>> elementary_vertices;
    std::vector<std::vector<uint32_t>> elementary_bits;
    std::vector<std::vector<ReductionNode>> bit_nodes;
    std::vector<std::string> label_names;
    /// Largest neighborhood radius searched when lifting a node set.
    size_t max_lift_radius = 6;
    /// Derived-edge weights: lift sizes, each elementary error's unit cost shared evenly
    /// among the derived edges it splits into, or both with the lighter result kept.
    enum class Weights { LIFT_SIZE, SHARED, LIGHTER_OF_BOTH } weights = Weights::LIGHTER_OF_BOTH;
};

/// An edge of the derived matching graph; `b == boundary` marks a single-ended edge.
struct ReductionEdge {
    uint32_t a;
    uint32_t b;
    std::vector<uint32_t> lift;
};

/// Reduction of a decoding problem to minimum-weight matching.
///
/// Each elementary error's node set is split into node pairs and single nodes
/// (edges of the derived graph). Every derived edge carries a lift: a set of
/// elementary errors whose node set is exactly the edge's endpoints.
class MatchingReduction {
   public:
    explicit MatchingReduction(ReductionInput input);

    const std::string &name() const {
        return name_;
    }
    size_t num_nodes() const {
        return nodes_.size();
    }
    size_t boundary() const {
        return nodes_.size();
    }
    const ReductionNode &node(size_t k) const {
        return nodes_[k];
    }
    size_t num_edges() const {
        return edges_.size();
    }
    const ReductionEdge &edge(size_t e) const {
        return edges_[e];
    }
    size_t num_elementary() const {
        return elementary_nodes_.size();
    }
    size_t num_bits() const {
        return bit_nodes_.size();
    }
    /// Derived edges an elementary error splits into.
    const std::vector<uint32_t> &split(size_t elementary) const {
        return split_[elementary];
    }
    /// Largest number of derived edges per elementary error.
    size_t max_split() const {
        return max_split_;
    }
    /// Largest lift size.
    size_t max_lift() const {
        return max_lift_;
    }
    /// Derived graph (nodes plus the boundary) weighted by lift sizes.
    const Graph &graph() const {
        return lift_graph_;
    }

    /// Node set (boundary excluded) of a set of syndrome bits.
    BitVec nodes_of_bits(const BitVec &bits) const;
    /// Node set of a set of elementary errors.
    BitVec nodes_of_elementary(const BitVec &elementary) const;
    /// Endpoints of a derived edge as a node set (boundary excluded).
    BitVec edge_nodes(size_t e) const;

    /// Elementary errors whose bit syndrome equals `bits`, built from a minimum-weight
    /// T-join over the derived graph. Chosen edges that make up a whole split are replaced
    /// by its elementary error, largest splits first; the rest are lifted.
    /// Throws NonSyndromeEvent if no matching exists.
    BitVec solve(const BitVec &bits) const;
    /// As solve, with a fixed weighting.
    BitVec solve_with(const BitVec &bits, ReductionInput::Weights weights) const;

    /// Text dump with [NODE], [EDGE] and [LIFT] sections.
    std::string export_text() const;

   private:
    std::optional<std::vector<uint32_t>> lift_nodes(const std::vector<uint32_t> &targets) const;

    std::string name_;
    std::vector<std::string> label_names_;
    std::vector<std::vector<uint32_t>> adjacency_;
    std::vector<std::vector<uint32_t>> elementary_vertices_;
    std::vector<std::vector<uint32_t>> vertex_elementary_;
    std::vector<ReductionNode> nodes_;
    std::vector<std::vector<uint32_t>> bit_nodes_;
    std::vector<std::vector<uint32_t>> elementary_nodes_;
    std::vector<ReductionEdge> edges_;
    std::vector<std::vector<uint32_t>> split_;
    /// Elementary errors by decreasing split size, then index.
    std::vector<uint32_t> contraction_order_;
    size_t max_split_ = 0;
    size_t max_lift_ = 0;
    size_t max_lift_radius_;
    ReductionInput::Weights weights_;
    Graph lift_graph_{1};
    Graph shared_graph_{1};
};

}  // namespace singleshot

#endif
