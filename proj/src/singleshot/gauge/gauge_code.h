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


#ifndef _SINGLESHOT_GAUGE_GAUGE_CODE_H
#define _SINGLESHOT_GAUGE_GAUGE_CODE_H

#include <cstdint>
#include <vector>

#include "singleshot/colex/colex.h"
#include "singleshot/pauli/subsystem_code.h"

namespace singleshot {

/// A Z-type gauge syndrome as a set of dual edges.
using FluxConfig = BitVec;
/// Error syndrome as bits over dual vertices; only frozen vertices can be set.
using VertexSyndrome = BitVec;
/// Per dual vertex element of the edge-charge group, stored as 3 bits.
using ChargeMap = std::vector<uint8_t>;

/// Edge-charge group element of a two-color label.
/// Basis rg = 1, gb = 2, by = 4; then gy = gb + by, rb = rg + gb, ry = rg + gy.
uint8_t label_charge(ColorSet label);
/// Vertex-charge group element of a color: r = 1, g = 2, b = 4, y = r + g + b.
uint8_t color_charge(int color);

/// A gauge color code together with its dual lattice and generator bookkeeping.
///
/// Bit-flip errors are X-type; their Z-plaquette outcomes form a flux
/// configuration and their Z-stabilizer outcomes an error syndrome.
class GaugeColorCode {
   public:
    explicit GaugeColorCode(Colex colex);

    const Colex &colex() const {
        return colex_;
    }
    const DualLattice &dual() const {
        return dual_;
    }
    const SubsystemCode &code() const {
        return code_;
    }
    size_t num_qubits() const {
        return dual_.num_qubits();
    }
    size_t num_edges() const {
        return dual_.num_edges();
    }
    size_t num_vertices() const {
        return dual_.num_vertices();
    }
    /// Dual vertices that carry stabilizers: internal vertices and frozen external ones.
    const std::vector<size_t> &frozen_vertices() const {
        return frozen_vertices_;
    }
    /// Largest support among the cell stabilizers.
    size_t max_stabilizer_weight() const {
        return max_stabilizer_weight_;
    }
    /// The label whose flux parity defines the syndrome at a vertex of this color.
    static ColorSet syndrome_label(int color);

    /// Flux of the X part of e; throws std::invalid_argument if e has a Z part.
    FluxConfig extract_gauge_syndrome(const PauliOperator &e) const;
    /// Flux of a set of flipped qubits.
    FluxConfig flux_of_flips(const BitVec &flips) const;
    /// Charge at every internal vertex; external vertices report 0.
    ChargeMap charge_of(const FluxConfig &edges) const;
    /// True iff every internal vertex sees equal parities for its three labels.
    bool is_valid_flux(const FluxConfig &edges) const;
    /// Internal vertices whose three label parities are odd plus frozen external
    /// vertices with odd syndrome-label parity. Throws std::invalid_argument on invalid flux.
    VertexSyndrome branching_points(const FluxConfig &gamma) const;
    /// Z-stabilizer syndrome (code order) determined by a valid flux.
    StabSyndrome err_of(const FluxConfig &gamma) const;
    /// Stabilizer outcome of flips at every frozen vertex.
    VertexSyndrome vertex_syndrome_of_flips(const BitVec &flips) const;
    /// Z-stabilizer part of syndrome_of for the X-type operator with these flips.
    StabSyndrome z_syndrome_of_flips(const BitVec &flips) const;
    /// Number of Z-type stabilizer generators.
    size_t num_z_stabilizers() const {
        return z_stab_vertex_.size();
    }

   private:
    Colex colex_;
    DualLattice dual_;
    SubsystemCode code_;
    std::vector<size_t> frozen_vertices_;
    size_t max_stabilizer_weight_ = 0;
    /// Per Z-stabilizer: its dual vertex, or SIZE_MAX for a global center element.
    std::vector<size_t> z_stab_vertex_;
    /// Per Z-stabilizer: the plaquettes whose product it is (global ones only).
    std::vector<BitVec> z_stab_plaquettes_;
    std::vector<BitVec> z_stab_support_;
    std::vector<std::vector<uint32_t>> qubit_edges_;
};

}  // namespace singleshot

#endif
