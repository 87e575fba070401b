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


#ifndef _SINGLESHOT_COLEX_COLEX_H
#define _SINGLESHOT_COLEX_COLEX_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singleshot/pauli/subsystem_code.h"

namespace singleshot {

/// A set of the four colors r, g, b, y stored as bits 0..3.
using ColorSet = uint8_t;

constexpr ColorSet ALL_COLORS = 0xF;
constexpr int NUM_COLORS = 4;

inline ColorSet color_bit(int color) {
    return ColorSet(1u << color);
}
inline ColorSet complement(ColorSet s) {
    return ColorSet(ALL_COLORS & ~s);
}
inline int color_count(ColorSet s) {
    return __builtin_popcount(s);
}
/// Lowest color in a nonempty set.
inline int lowest_color(ColorSet s) {
    return __builtin_ctz(s);
}

/// Letters in rgby order, e.g. "rg"; the empty set is "".
std::string color_set_name(ColorSet s);
/// Inverse of color_set_name; throws std::invalid_argument on unknown letters or repeats.
ColorSet parse_color_set(const std::string &text);

/// A 4-colored simplicial complex: each tetrahedron has one vertex of every color.
///
/// External vertices stand for boundary regions. This is the construction
/// substrate from which colexes are derived.
struct DualComplex {
    std::string family;
    std::vector<uint8_t> vertex_color;
    std::vector<uint8_t> vertex_external;
    /// tets[t][c] is the vertex of color c.
    std::vector<std::array<uint32_t, 4>> tets;

    bool operator==(const DualComplex &other) const = default;
};

/// A labelled set of colex vertices (edge, plaquette, cell, border or corner).
struct ColexCell {
    ColorSet label = 0;
    std::vector<uint32_t> vertices;

    bool operator==(const ColexCell &other) const = default;
};

enum class RegionKind : uint8_t {
    FREE,
    FROZEN,
};

struct ColexRegion {
    int color = 0;
    RegionKind kind = RegionKind::FREE;
    std::vector<uint32_t> vertices;

    bool operator==(const ColexRegion &other) const = default;
};

struct ColexBorder {
    std::array<uint32_t, 2> regions{};
    ColorSet label = 0;
    bool odd = false;
    std::vector<uint32_t> vertices;

    bool operator==(const ColexBorder &other) const = default;
};

struct ColexCorner {
    std::array<uint32_t, 3> regions{};
    ColorSet label = 0;
    std::vector<uint32_t> vertices;

    bool operator==(const ColexCorner &other) const = default;
};

/// A 3-colex with its boundary strata.
///
/// Edges carry one color, plaquettes two and cells three. A vertex's context
/// is the set of colors of the regions containing it (empty in the bulk).
/// All vertex lists are sorted.
struct Colex {
    std::string family;
    std::vector<ColorSet> vertex_context;
    std::vector<ColexCell> edges;
    std::vector<ColexCell> plaquettes;
    std::vector<ColexCell> cells;
    std::vector<ColexRegion> regions;
    std::vector<ColexBorder> borders;
    std::vector<ColexCorner> corners;

    size_t num_vertices() const {
        return vertex_context.size();
    }
    bool closed() const {
        return regions.empty();
    }
    bool operator==(const Colex &other) const = default;
};

/// Colex whose vertices are the tetrahedra of the complex.
///
/// A face spanned by the colors C becomes the cell labelled by the complement
/// of C whose vertices are the tetrahedra containing that face. Faces made
/// only of external vertices become regions, borders and corners.
/// Throws std::invalid_argument if a tetrahedron's vertex colors are wrong or
/// if a region is neither free nor frozen.
Colex colex_from_complex(const DualComplex &complex);

struct ValidationReport {
    bool ok = true;
    std::string message;
    std::optional<size_t> vertex;
    std::optional<ColorSet> label;
};

/// Checks the defining incidence and the boundary strata; reports the first violation.
ValidationReport validate(const Colex &colex);

struct DualEdge {
    uint32_t u = 0;
    uint32_t v = 0;
    /// The two colors not carried by the endpoints.
    ColorSet label = 0;
};

/// The simplicial dual of a colex.
///
/// Dual vertex i < num_internal() is cell i; dual vertex num_internal() + r is
/// region r. Dual edge e is plaquette e. Qubit q is colex vertex q.
class DualLattice {
   public:
    explicit DualLattice(const Colex &colex);

    size_t num_vertices() const {
        return vertex_color_.size();
    }
    size_t num_internal() const {
        return num_internal_;
    }
    size_t num_qubits() const {
        return qubit_vertices_.size();
    }
    size_t num_edges() const {
        return edges_.size();
    }
    int color(size_t v) const {
        return vertex_color_[v];
    }
    bool external(size_t v) const {
        return v >= num_internal_;
    }
    /// Internal vertices are frozen; external ones follow their region.
    bool frozen(size_t v) const {
        return frozen_[v];
    }
    const DualEdge &edge(size_t e) const {
        return edges_[e];
    }
    const std::vector<DualEdge> &edges() const {
        return edges_;
    }
    /// Dual edges meeting v, sorted.
    const std::vector<uint32_t> &vertex_edges(size_t v) const {
        return vertex_edges_[v];
    }
    /// Qubits of the tetrahedra meeting v (the cell or region support), sorted.
    const std::vector<uint32_t> &vertex_qubits(size_t v) const {
        return vertex_qubits_[v];
    }
    /// Qubits of the plaquette dual to e, sorted.
    const std::vector<uint32_t> &edge_qubits(size_t e) const {
        return edge_qubits_[e];
    }
    /// The tetrahedron of qubit q, indexed by color.
    const std::array<uint32_t, 4> &qubit_vertices(size_t q) const {
        return qubit_vertices_[q];
    }
    /// The other endpoint of edge e.
    size_t other_end(size_t e, size_t v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

    /// The underlying 4-colored complex.
    DualComplex complex(const std::string &family) const;

   private:
    size_t num_internal_ = 0;
    std::vector<int> vertex_color_;
    std::vector<bool> frozen_;
    std::vector<DualEdge> edges_;
    std::vector<std::vector<uint32_t>> vertex_edges_;
    std::vector<std::vector<uint32_t>> vertex_qubits_;
    std::vector<std::vector<uint32_t>> edge_qubits_;
    std::vector<std::array<uint32_t, 4>> qubit_vertices_;
};

/// Throws std::invalid_argument if the colex does not validate.
DualLattice dualize(const Colex &colex);

/// Gauge color code of a colex.
///
/// Gauge generators: X_p for every plaquette p, then Z_p in the same order.
/// Stabilizer generators: X-type cells, independent frozen regions and any
/// further X-type center elements, then the Z-type counterparts in the same
/// order. Logical pairs come from a free region when the code encodes one
/// qubit and from a generic search otherwise.
/// Throws std::invalid_argument if the colex does not validate.
SubsystemCode derive_code(const Colex &colex);

/// Dual vertices behind the X-type stabilizer generators of derive_code, in order.
std::vector<size_t> stabilizer_dual_vertices(const Colex &colex);

/// Structured text export with a schema version.
std::string colex_to_json(const Colex &colex);
/// Inverse of colex_to_json; throws std::invalid_argument naming the bad field.
Colex colex_from_json(const std::string &text);

}  // namespace singleshot

#endif
