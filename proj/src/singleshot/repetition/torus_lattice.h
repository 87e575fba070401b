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

#ifndef _SINGLESHOT_REPETITION_TORUS_LATTICE_H
#define _SINGLESHOT_REPETITION_TORUS_LATTICE_H

#include <array>
#include <stdexcept>
#include <vector>

#include "singleshot/bits/bit_vec.h"
#include "singleshot/matching/t_join.h"
#include "singleshot/pauli/subsystem_code.h"
#include "singleshot/util/events.h"

namespace singleshot {

using EdgeSet = BitVec;
using FaceSet = BitVec;

/// L x L periodic square lattice: qubits on faces, checks on edges, matching nodes on vertices.
/// Face (r,c) and vertex (r,c) have index r*L+c; vertex (r,c) is the top-left corner of face (r,c).
/// Horizontal edge r*L+c joins vertices (r,c)-(r,c+1) and borders faces (r-1,c),(r,c).
/// Vertical edge L*L+r*L+c joins vertices (r,c)-(r+1,c) and borders faces (r,c-1),(r,c).
class TorusLattice {
   public:
    explicit TorusLattice(size_t L);
    size_t L() const {
        return L_;
    }
    size_t num_faces() const {
        return L_ * L_;
    }
    size_t num_edges() const {
        return 2 * L_ * L_;
    }
    size_t num_vertices() const {
        return L_ * L_;
    }
    size_t index(size_t r, size_t c) const {
        return (r % L_) * L_ + (c % L_);
    }
    size_t h_edge(size_t r, size_t c) const {
        return index(r, c);
    }
    size_t v_edge(size_t r, size_t c) const {
        return L_ * L_ + index(r, c);
    }
    std::pair<size_t, size_t> edge_faces(size_t e) const;
    std::pair<size_t, size_t> edge_vertices(size_t e) const;
    std::array<size_t, 4> vertex_edges(size_t v) const;
    std::array<size_t, 4> face_edges(size_t f) const;
    /// Vertex graph with one unit-weight edge per lattice edge, same indices.
    const Graph &vertex_graph() const {
        return graph_;
    }
    /// L1 distance with wraparound.
    size_t distance(size_t u, size_t v) const;
    /// Shortest path: along the row of u first, then along the column of v;
    /// half-way ties step in the increasing direction.
    std::vector<size_t> canonical_path(size_t u, size_t v) const;

   private:
    size_t L_;
    Graph graph_;
};

/// Edges where exactly one adjacent face is in f.
EdgeSet boundary(const TorusLattice &lattice, const FaceSet &f);

std::vector<size_t> odd_vertices(const TorusLattice &lattice, const EdgeSet &edges);

bool is_closed(const TorusLattice &lattice, const EdgeSet &edges);

/// Sizes of edge clusters (edges connected through shared vertices), in order of lowest edge.
std::vector<size_t> edge_cluster_sizes(const TorusLattice &lattice, const EdgeSet &edges);

/// Minimum-cardinality repair w0 with p + w0 closed; depends only on the odd vertices of p.
EdgeSet close_pseudo_syndrome(const TorusLattice &lattice, const EdgeSet &p);

/// Corrects each connected component of a closed syndrome by flipping the smaller enclosed region
/// (ties: the region containing the lowest-index face). Throws std::invalid_argument if l is not
/// closed and NonSyndromeEvent if some component is homologically nontrivial.
FaceSet decode(const TorusLattice &lattice, const EdgeSet &l);

/// Whether a face set is the encoded-bit flip of its boundary class.
struct LogicalClass {
    bool logical;
    bool tie;
};
LogicalClass logical_class(const TorusLattice &lattice, const FaceSet &f);

/// Classical repetition code on the faces: Z checks on edges, logical X on all faces, Z on face 0.
SubsystemCode ising_torus_code(size_t L);

}  // namespace singleshot

#endif
