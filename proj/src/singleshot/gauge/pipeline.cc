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


#include "singleshot/gauge/pipeline.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "singleshot/matching/blossom.h"

namespace singleshot {

namespace {

constexpr ColorSet RG = 0b0011;
constexpr ColorSet GB = 0b0110;
constexpr ColorSet BY = 0b1100;
constexpr ColorSet GY = 0b1010;
constexpr ColorSet RB = 0b0101;
constexpr ColorSet RY = 0b1001;
constexpr ColorSet PAIR_LABELS[6] = {RG, GB, BY, GY, RB, RY};

/// Labels whose charges form a basis of the charges allowed at a vertex of each color.
constexpr ColorSet REPAIR_BASIS[NUM_COLORS][2] = {{GB, BY}, {BY, RB}, {RG, GY}, {RG, GB}};

enum RepairNodeLabel : uint8_t { NODE_RG = 0, NODE_GB = 1, NODE_BY = 2 };
enum DecodeNodeLabel : uint8_t { NODE_R = 0, NODE_G = 1, NODE_X = 2 };

BitVec flips_of(size_t n, const std::vector<uint32_t> &qubits) {
    BitVec out(n);
    for (uint32_t q : qubits) {
        out.flip(q);
    }
    return out;
}

/// Dual links directed into frozen vertices only.
std::vector<std::vector<uint32_t>> search_adjacency(const DualLattice &dual) {
    std::vector<std::vector<uint32_t>> adj(dual.num_vertices());
    for (const auto &e : dual.edges()) {
        if (dual.frozen(e.u)) {
            adj[e.v].push_back(e.u);
        }
        if (dual.frozen(e.v)) {
            adj[e.u].push_back(e.v);
        }
    }
    for (auto &list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

/// For each vertex, the nearest other frozen vertex of each color (lowest index on ties).
std::vector<std::array<uint32_t, NUM_COLORS>> nearest_partners(
    const DualLattice &dual, const std::vector<std::vector<uint32_t>> &adj) {
    size_t nv = dual.num_vertices();
    std::vector<std::array<uint32_t, NUM_COLORS>> out(nv);
    for (size_t v = 0; v < nv; v++) {
        std::vector<size_t> dist(nv, SIZE_MAX);
        std::vector<uint32_t> layer{uint32_t(v)};
        dist[v] = 0;
        std::array<bool, NUM_COLORS> found{};
        out[v].fill(UINT32_MAX);
        while (!layer.empty()) {
            std::vector<uint32_t> sorted = layer;
            std::sort(sorted.begin(), sorted.end());
            for (uint32_t w : sorted) {
                int c = dual.color(w);
                if (w != v && dual.frozen(w) && !found[c]) {
                    found[c] = true;
                    out[v][c] = w;
                }
            }
            std::vector<uint32_t> next;
            for (uint32_t w : layer) {
                for (uint32_t x : adj[w]) {
                    if (dist[x] == SIZE_MAX) {
                        dist[x] = dist[w] + 1;
                        next.push_back(x);
                    }
                }
            }
            layer = std::move(next);
        }
    }
    return out;
}

uint32_t require_partner(const std::vector<std::array<uint32_t, NUM_COLORS>> &partners, size_t v, int color) {
    uint32_t p = partners[v][color];
    if (p == UINT32_MAX) {
        throw std::invalid_argument(
            "Dual vertex " + std::to_string(v) + " has no frozen vertex of color '" + color_set_name(color_bit(color)) +
            "' within reach.");
    }
    return p;
}

/// Repair nodes of bit j at internal vertex v. Regions absorb charge, so partner nodes
/// landing on a region are left out.
std::vector<ReductionNode> repair_bit_nodes(
    const DualLattice &dual, const std::vector<std::array<uint32_t, NUM_COLORS>> &partners, uint32_t v, int j) {
    auto with_partner = [&](uint8_t own, int color, uint8_t label) -> std::vector<ReductionNode> {
        uint32_t p = require_partner(partners, v, color);
        if (dual.external(p)) {
            return {{v, own}};
        }
        return {{v, own}, {p, label}};
    };
    switch (dual.color(v) * 2 + j) {
        case 0:
            return {{v, NODE_GB}};
        case 1:
            return {{v, NODE_BY}};
        case 2:
            return {{v, NODE_BY}};
        case 3:
            return with_partner(NODE_RG, 3, NODE_GB);
        case 4:
            return {{v, NODE_RG}};
        case 5:
            return with_partner(NODE_GB, 0, NODE_BY);
        case 6:
            return {{v, NODE_RG}};
        default:
            return {{v, NODE_GB}};
    }
}

std::vector<ReductionNode> decode_bit_nodes(
    const DualLattice &dual, const std::vector<std::array<uint32_t, NUM_COLORS>> &partners, uint32_t v) {
    switch (dual.color(v)) {
        case 0:
            return {{v, NODE_R}};
        case 1:
            return {{v, NODE_G}};
        case 2:
            return {{v, NODE_X}, {require_partner(partners, v, 0), NODE_R}};
        default:
            return {{v, NODE_X}, {require_partner(partners, v, 1), NODE_G}};
    }
}

/// Bits (b0, b1) with b0 q0 + b1 q1 = charge for the two basis charges of a color.
std::pair<bool, bool> basis_coefficients(int color, uint8_t charge) {
    uint8_t q0 = label_charge(REPAIR_BASIS[color][0]);
    uint8_t q1 = label_charge(REPAIR_BASIS[color][1]);
    for (int m = 0; m < 4; m++) {
        uint8_t c = uint8_t(((m & 1) ? q0 : 0) ^ ((m & 2) ? q1 : 0));
        if (c == charge) {
            return {bool(m & 1), bool(m & 2)};
        }
    }
    throw std::invalid_argument(
        "Charge " + std::to_string(charge) + " cannot occur at a vertex of color '" + color_set_name(color_bit(color)) +
        "'.");
}

/// Removes kernel combinations from sol while that lowers its weight.
void reduce_with_kernel(BitVec &sol, const Gf2Span &span) {
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
}

}  // namespace

std::vector<std::vector<size_t>> flux_components(const DualLattice &dual, const FluxConfig &edges) {
    if (edges.size() != dual.num_edges()) {
        throw std::invalid_argument("Edge set size does not match the dual lattice.");
    }
    std::vector<std::vector<size_t>> out;
    std::vector<bool> seen(dual.num_edges(), false);
    for (size_t start : edges.ones()) {
        if (seen[start]) {
            continue;
        }
        std::vector<size_t> comp{start};
        seen[start] = true;
        for (size_t h = 0; h < comp.size(); h++) {
            const auto &de = dual.edge(comp[h]);
            for (uint32_t v : {de.u, de.v}) {
                if (dual.external(v)) {
                    continue;
                }
                for (uint32_t f : dual.vertex_edges(v)) {
                    if (edges[f] && !seen[f]) {
                        seen[f] = true;
                        comp.push_back(f);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

GaugeDecoder::GaugeDecoder(std::shared_ptr<const GaugeColorCode> code, ReductionInput::Weights weights)
    : code_(std::move(code)) {
    if (!code_) {
        throw std::invalid_argument("GaugeDecoder needs a code.");
    }
    const DualLattice &dual = code_->dual();
    size_t n = dual.num_qubits();
    size_t nv = dual.num_vertices();
    auto adj = search_adjacency(dual);
    auto partners = nearest_partners(dual, adj);

    ReductionInput rep;
    rep.name = "repair";
    rep.vertex_adjacency = adj;
    rep.label_names = {"rg", "gb", "by"};
    for (uint32_t v = 0; v < dual.num_internal(); v++) {
        for (int j = 0; j < 2; j++) {
            rep.bit_nodes.push_back(repair_bit_nodes(dual, partners, v, j));
        }
    }
    for (size_t e = 0; e < dual.num_edges(); e++) {
        const auto &de = dual.edge(e);
        rep.elementary_vertices.push_back({de.u, de.v});
        std::vector<uint32_t> bits;
        for (uint32_t v : {de.u, de.v}) {
            if (!dual.external(v)) {
                auto [b0, b1] = basis_coefficients(dual.color(v), label_charge(de.label));
                if (b0) {
                    bits.push_back(2 * v);
                }
                if (b1) {
                    bits.push_back(2 * v + 1);
                }
            }
        }
        rep.elementary_bits.push_back(bits);
    }
    rep.weights = weights;
    repair_ = std::make_unique<MatchingReduction>(std::move(rep));

    ReductionInput dec;
    dec.name = "decode";
    dec.vertex_adjacency = adj;
    dec.label_names = {"r", "g", "x"};
    decode_bit_.assign(nv, -1);
    for (size_t v : code_->frozen_vertices()) {
        decode_bit_[v] = int64_t(dec.bit_nodes.size());
        dec.bit_nodes.push_back(decode_bit_nodes(dual, partners, uint32_t(v)));
    }
    for (size_t q = 0; q < n; q++) {
        std::vector<uint32_t> verts;
        std::vector<uint32_t> bits;
        for (uint32_t v : dual.qubit_vertices(q)) {
            verts.push_back(v);
            if (decode_bit_[v] >= 0) {
                bits.push_back(uint32_t(decode_bit_[v]));
            }
        }
        dec.elementary_vertices.push_back(verts);
        dec.elementary_bits.push_back(bits);
    }
    dec.weights = weights;
    decode_ = std::make_unique<MatchingReduction>(std::move(dec));

    for (size_t q = 0; q < n; q++) {
        auto flux = code_->flux_of_flips(flips_of(n, {uint32_t(q)})).ones();
        qubit_flux_.emplace_back(flux.begin(), flux.end());
    }
    plaquette_flux_ = std::make_unique<Gf2Span>(dual.num_edges(), dual.num_edges());
    for (size_t e = 0; e < dual.num_edges(); e++) {
        plaquette_flux_->add(code_->flux_of_flips(flips_of(n, dual.edge_qubits(e))));
    }

    for (int i = 0; i < 6; i++) {
        label_graphs_[i] = Graph(nv);
    }
    for (size_t e = 0; e < dual.num_edges(); e++) {
        const auto &de = dual.edge(e);
        int i = int(std::find(std::begin(PAIR_LABELS), std::end(PAIR_LABELS), de.label) - std::begin(PAIR_LABELS));
        label_graphs_[i].add_edge(de.u, de.v);
        label_edges_[i].push_back(e);
    }
    for (size_t v = dual.num_internal(); v < nv; v++) {
        externals_.push_back(v);
    }

    z_logical_ = BitVec(n);
    for (const auto &p : code_->code().logical_reps()) {
        if (p.xs.none() && !p.zs.none()) {
            z_logical_ = p.zs;
            break;
        }
    }
}

BitVec GaugeDecoder::repair_bits(const ChargeMap &charge) const {
    const DualLattice &dual = code_->dual();
    if (charge.size() != dual.num_vertices()) {
        throw std::invalid_argument("Charge map size does not match the dual lattice.");
    }
    BitVec bits(2 * dual.num_internal());
    for (size_t v = 0; v < dual.num_internal(); v++) {
        if (charge[v] == 0) {
            continue;
        }
        auto [b0, b1] = basis_coefficients(dual.color(v), charge[v]);
        bits.set(2 * v, b0);
        bits.set(2 * v + 1, b1);
    }
    return bits;
}

FluxConfig GaugeDecoder::repair_gauge_syndrome(const FluxConfig &measured) const {
    FluxConfig delta0 = repair_->solve(repair_bits(code_->charge_of(measured)));
    polish_repair(delta0);
    return delta0;
}

void GaugeDecoder::polish_repair(FluxConfig &delta0) const {
    const DualLattice &dual = code_->dual();
    auto gain_of = [&](const std::vector<uint32_t> &edges) {
        int64_t overlap = 0;
        for (uint32_t e : edges) {
            overlap += delta0[e];
        }
        return 2 * overlap - int64_t(edges.size());
    };
    auto apply = [&](const std::vector<uint32_t> &edges) {
        for (uint32_t e : edges) {
            delta0.flip(e);
        }
    };
    bool improved = true;
    while (improved) {
        improved = false;
        std::vector<uint32_t> candidates;
        for (size_t e : delta0.ones()) {
            const auto &qs = dual.edge_qubits(e);
            candidates.insert(candidates.end(), qs.begin(), qs.end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (uint32_t q : candidates) {
            if (gain_of(qubit_flux_[q]) > 0) {
                apply(qubit_flux_[q]);
                improved = true;
            }
        }
        if (improved) {
            continue;
        }
        for (size_t i = 0; i < candidates.size() && !improved; i++) {
            for (size_t j = i + 1; j < candidates.size() && !improved; j++) {
                std::vector<uint32_t> both;
                std::set_symmetric_difference(qubit_flux_[candidates[i]].begin(), qubit_flux_[candidates[i]].end(),
                                              qubit_flux_[candidates[j]].begin(), qubit_flux_[candidates[j]].end(),
                                              std::back_inserter(both));
                if (gain_of(both) > 0) {
                    apply(both);
                    improved = true;
                }
            }
        }
    }
}

BitVec GaugeDecoder::decode_syndrome(const VertexSyndrome &sigma) const {
    if (sigma.size() != code_->num_vertices()) {
        throw std::invalid_argument("Syndrome size does not match the dual lattice.");
    }
    BitVec bits(decode_->num_bits());
    for (size_t v : sigma.ones()) {
        if (decode_bit_[v] < 0) {
            throw std::invalid_argument("Syndrome is set on dual vertex " + std::to_string(v) + ", which has no stabilizer.");
        }
        bits.flip(size_t(decode_bit_[v]));
    }
    BitVec flips = decode_->solve(bits);
    if (code_->vertex_syndrome_of_flips(flips) != sigma) {
        throw std::logic_error("Decoded flips do not reproduce the syndrome.");
    }
    return flips;
}

FluxConfig GaugeDecoder::simplified_flux_repair(const FluxConfig &measured) const {
    const DualLattice &dual = code_->dual();
    if (measured.size() != dual.num_edges()) {
        throw std::invalid_argument("Edge set size does not match the dual lattice.");
    }
    FluxConfig out(dual.num_edges());
    for (int i = 0; i < 6; i++) {
        const auto &edges = label_edges_[i];
        std::vector<uint8_t> parity(dual.num_internal(), 0);
        for (size_t e : edges) {
            if (measured[e]) {
                for (uint32_t v : {dual.edge(e).u, dual.edge(e).v}) {
                    if (!dual.external(v)) {
                        parity[v] ^= 1;
                    }
                }
            }
        }
        std::vector<size_t> defects;
        for (size_t v = 0; v < parity.size(); v++) {
            if (parity[v]) {
                defects.push_back(v);
            }
        }
        if (defects.empty()) {
            continue;
        }
        BitVec sol(edges.size());
        try {
            sol = t_join(label_graphs_[i], defects, externals_);
        } catch (const InfeasibleMatchingError &ex) {
            throw NonSyndromeEvent(std::string("Label repair found no matching: ") + ex.what());
        }
        for (size_t j : sol.ones()) {
            out.flip(edges[j]);
        }
    }
    return out;
}

KWitness GaugeDecoder::k_confinement_witness(const FluxConfig &gamma) const {
    const DualLattice &dual = code_->dual();
    size_t n = dual.num_qubits();
    if (!code_->is_valid_flux(gamma)) {
        throw std::invalid_argument("Flux configuration is not valid.");
    }
    BitVec total(n);
    for (const auto &comp : flux_components(dual, gamma)) {
        FluxConfig part(dual.num_edges());
        std::vector<uint32_t> verts;
        for (size_t e : comp) {
            part.flip(e);
            for (uint32_t v : {dual.edge(e).u, dual.edge(e).v}) {
                if (!dual.external(v)) {
                    verts.push_back(v);
                }
            }
        }
        VertexSyndrome target = code_->branching_points(part);
        if (target.none()) {
            continue;
        }
        std::vector<uint32_t> support;
        for (uint32_t v : verts) {
            const auto &qs = dual.vertex_qubits(v);
            support.insert(support.end(), qs.begin(), qs.end());
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        Gf2Span span(dual.num_vertices(), support.size());
        for (uint32_t q : support) {
            span.add(code_->vertex_syndrome_of_flips(flips_of(n, {q})));
        }
        auto combo = span.solve(target);
        if (!combo.has_value()) {
            throw NonSyndromeEvent("A flux component carries a syndrome that no local error reproduces.");
        }
        BitVec sol = *combo;
        reduce_with_kernel(sol, span);
        for (size_t i : sol.ones()) {
            total.flip(support[i]);
        }
    }
    return KWitness{total, double(total.popcount()) / double(std::max<size_t>(1, gamma.popcount()))};
}

std::vector<NeutralityComponent> GaugeDecoder::neutrality(const FluxConfig &gamma) const {
    const DualLattice &dual = code_->dual();
    if (!code_->is_valid_flux(gamma)) {
        throw std::invalid_argument("Flux configuration is not valid.");
    }
    std::vector<NeutralityComponent> out;
    for (auto &comp : flux_components(dual, gamma)) {
        FluxConfig part(dual.num_edges());
        uint8_t touched = 0;
        for (size_t e : comp) {
            part.flip(e);
            for (uint32_t v : {dual.edge(e).u, dual.edge(e).v}) {
                if (dual.external(v) && !dual.frozen(v)) {
                    touched |= uint8_t(1 << dual.color(v));
                }
            }
        }
        uint8_t charge = 0;
        for (size_t v : code_->branching_points(part).ones()) {
            charge ^= color_charge(dual.color(v));
        }
        std::vector<uint8_t> span{0};
        for (int c = 0; c < NUM_COLORS; c++) {
            if (touched & (1 << c)) {
                size_t m = span.size();
                for (size_t i = 0; i < m; i++) {
                    span.push_back(span[i] ^ color_charge(c));
                }
            }
        }
        std::sort(span.begin(), span.end());
        span.erase(std::unique(span.begin(), span.end()), span.end());
        bool ok = std::binary_search(span.begin(), span.end(), charge);
        out.push_back(NeutralityComponent{std::move(comp), charge, std::move(span), ok});
    }
    return out;
}

GaugeFix GaugeDecoder::gauge_fix(const FluxConfig &repaired) const {
    const DualLattice &dual = code_->dual();
    size_t n = dual.num_qubits();
    VertexSyndrome sigma = code_->branching_points(repaired);
    BitVec correction = decode_syndrome(sigma);
    FluxConfig target = repaired ^ code_->flux_of_flips(correction);
    auto combo = plaquette_flux_->solve(target);
    if (!combo.has_value()) {
        throw NonSyndromeEvent("Repaired flux differs from the correction's flux by a non-gauge configuration.");
    }
    BitVec gauge(n);
    for (size_t e : combo->ones()) {
        for (uint32_t q : dual.edge_qubits(e)) {
            gauge.flip(q);
        }
    }
    return GaugeFix{correction, gauge};
}

bool GaugeDecoder::logical_flag(const BitVec &state) const {
    BitVec residual = state ^ decode_syndrome(code_->vertex_syndrome_of_flips(state));
    return residual.dot(z_logical_);
}

GaugeRoundRecord GaugeDecoder::single_shot_round(BitVec &state, double lambda, double eta, Rng &rng) const {
    GaugeRoundRecord rec;
    flip_random_bits(state, lambda, rng);
    FluxConfig delta = random_bits(code_->num_edges(), eta, rng);
    FluxConfig measured = code_->flux_of_flips(state) ^ delta;
    rec.w = delta.popcount();
    try {
        FluxConfig delta0 = repair_gauge_syndrome(measured);
        GaugeFix fix = gauge_fix(measured ^ delta0);
        state ^= fix.correction;
        state ^= fix.gauge;
        FluxConfig effective = delta ^ delta0;
        rec.w0 = delta0.popcount();
        rec.residual_weight = effective.popcount();
        for (const auto &comp : flux_components(code_->dual(), effective)) {
            rec.cluster_sizes.push_back(comp.size());
            rec.largest_cluster = std::max(rec.largest_cluster, comp.size());
        }
        rec.logical = logical_flag(state);
    } catch (const NonSyndromeEvent &) {
        rec.nonsyndrome = true;
    }
    return rec;
}

}  // namespace singleshot
