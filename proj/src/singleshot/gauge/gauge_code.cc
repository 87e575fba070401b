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


#include "singleshot/gauge/gauge_code.h"

namespace singleshot {

uint8_t label_charge(ColorSet label) {
    switch (label) {
        case 0b0011:
            return 1;  // rg
        case 0b0110:
            return 2;  // gb
        case 0b1100:
            return 4;  // by
        case 0b1010:
            return 6;  // gy
        case 0b0101:
            return 3;  // rb
        case 0b1001:
            return 7;  // ry
        default:
            throw std::invalid_argument("Label '" + color_set_name(label) + "' is not a color pair.");
    }
}

uint8_t color_charge(int color) {
    static const uint8_t CHARGES[NUM_COLORS] = {1, 2, 4, 7};
    if (color < 0 || color >= NUM_COLORS) {
        throw std::invalid_argument("Color index out of range.");
    }
    return CHARGES[color];
}

ColorSet GaugeColorCode::syndrome_label(int color) {
    ColorSet rest = complement(color_bit(color));
    return ColorSet(rest & ~color_bit(31 - __builtin_clz(rest)));
}

GaugeColorCode::GaugeColorCode(Colex colex)
    : colex_(std::move(colex)), dual_(dualize(colex_)), code_(derive_code(colex_)) {
    size_t n = dual_.num_qubits();
    for (size_t v = 0; v < dual_.num_vertices(); v++) {
        if (dual_.frozen(v)) {
            frozen_vertices_.push_back(v);
        }
    }
    for (const auto &c : colex_.cells) {
        max_stabilizer_weight_ = std::max(max_stabilizer_weight_, c.vertices.size());
    }
    qubit_edges_.resize(n);
    for (size_t e = 0; e < dual_.num_edges(); e++) {
        for (uint32_t q : dual_.edge_qubits(e)) {
            qubit_edges_[q].push_back(uint32_t(e));
        }
    }

    auto local = stabilizer_dual_vertices(colex_);
    Gf2Span plaquettes(n, dual_.num_edges());
    for (size_t e = 0; e < dual_.num_edges(); e++) {
        plaquettes.add(BitVec::from_indices(n, std::vector<size_t>(dual_.edge_qubits(e).begin(), dual_.edge_qubits(e).end())));
    }
    size_t j = 0;
    for (const auto &s : code_.stab_gens()) {
        if (!s.is_z_type()) {
            continue;
        }
        z_stab_support_.push_back(s.zs);
        if (j < local.size()) {
            z_stab_vertex_.push_back(local[j]);
            z_stab_plaquettes_.emplace_back();
        } else {
            auto combo = plaquettes.solve(s.zs);
            if (!combo.has_value()) {
                throw std::logic_error("Global stabilizer is not a product of plaquettes.");
            }
            z_stab_vertex_.push_back(SIZE_MAX);
            z_stab_plaquettes_.push_back(*combo);
        }
        j++;
    }
}

FluxConfig GaugeColorCode::extract_gauge_syndrome(const PauliOperator &e) const {
    if (e.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Operator size does not match the code.");
    }
    if (!e.is_x_type()) {
        throw std::invalid_argument("Flux extraction expects a bit-flip (X-type) operator.");
    }
    return flux_of_flips(e.xs);
}

FluxConfig GaugeColorCode::flux_of_flips(const BitVec &flips) const {
    if (flips.size() != num_qubits()) {
        throw std::invalid_argument("Flip set size does not match the code.");
    }
    FluxConfig out(num_edges());
    for (size_t q : flips.ones()) {
        for (uint32_t e : qubit_edges_[q]) {
            out.flip(e);
        }
    }
    return out;
}

ChargeMap GaugeColorCode::charge_of(const FluxConfig &edges) const {
    if (edges.size() != num_edges()) {
        throw std::invalid_argument("Edge set size does not match the dual lattice.");
    }
    ChargeMap charge(num_vertices(), 0);
    for (size_t e : edges.ones()) {
        const auto &de = dual_.edge(e);
        uint8_t c = label_charge(de.label);
        for (uint32_t v : {de.u, de.v}) {
            if (!dual_.external(v)) {
                charge[v] ^= c;
            }
        }
    }
    return charge;
}

bool GaugeColorCode::is_valid_flux(const FluxConfig &edges) const {
    for (uint8_t c : charge_of(edges)) {
        if (c) {
            return false;
        }
    }
    return true;
}

VertexSyndrome GaugeColorCode::branching_points(const FluxConfig &gamma) const {
    if (!is_valid_flux(gamma)) {
        throw std::invalid_argument("Flux configuration is not valid.");
    }
    VertexSyndrome out(num_vertices());
    for (size_t e : gamma.ones()) {
        const auto &de = dual_.edge(e);
        for (uint32_t v : {de.u, de.v}) {
            if (dual_.frozen(v) && de.label == syndrome_label(dual_.color(v))) {
                out.flip(v);
            }
        }
    }
    return out;
}

StabSyndrome GaugeColorCode::err_of(const FluxConfig &gamma) const {
    VertexSyndrome points = branching_points(gamma);
    StabSyndrome out(z_stab_vertex_.size());
    for (size_t j = 0; j < z_stab_vertex_.size(); j++) {
        bool bit = z_stab_vertex_[j] != SIZE_MAX ? points[z_stab_vertex_[j]] : gamma.dot(z_stab_plaquettes_[j]);
        out.set(j, bit);
    }
    return out;
}

VertexSyndrome GaugeColorCode::vertex_syndrome_of_flips(const BitVec &flips) const {
    if (flips.size() != num_qubits()) {
        throw std::invalid_argument("Flip set size does not match the code.");
    }
    VertexSyndrome out(num_vertices());
    for (size_t q : flips.ones()) {
        for (uint32_t v : dual_.qubit_vertices(q)) {
            if (dual_.frozen(v)) {
                out.flip(v);
            }
        }
    }
    return out;
}

StabSyndrome GaugeColorCode::z_syndrome_of_flips(const BitVec &flips) const {
    StabSyndrome out(z_stab_support_.size());
    for (size_t j = 0; j < z_stab_support_.size(); j++) {
        out.set(j, flips.dot(z_stab_support_[j]));
    }
    return out;
}

}  // namespace singleshot
