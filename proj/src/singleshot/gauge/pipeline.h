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


#ifndef _SINGLESHOT_GAUGE_PIPELINE_H
#define _SINGLESHOT_GAUGE_PIPELINE_H

#include <array>
#include <memory>

#include "singleshot/gauge/gauge_code.h"
#include "singleshot/gauge/reduction.h"
#include "singleshot/pauli/gf2.h"
#include "singleshot/util/events.h"
#include "singleshot/util/rng.h"

namespace singleshot {

/// Connected components of an edge set, joined through shared internal vertices.
/// Components are ordered by their lowest edge; each lists its edges in increasing order.
std::vector<std::vector<size_t>> flux_components(const DualLattice &dual, const FluxConfig &edges);

/// Largest observed ratio of repair weight to the exact minimum per flux component,
/// on tetrahedral codes up to distance 5.
constexpr double REPAIR_RATIO_BOUND = 6.0;
/// Largest observed ratio of decoded weight to the minimum-weight flip set with the same
/// syndrome, on tetrahedral codes up to distance 5.
constexpr double DECODE_RATIO_BOUND = 4.0;

struct KWitness {
    BitVec flips;
    double ratio;
};

struct NeutralityComponent {
    std::vector<size_t> edges;
    /// Total vertex charge of the component's branching and termination points.
    uint8_t charge;
    /// Span of the colors of free regions the component touches.
    std::vector<uint8_t> absorbable;
    bool ok;
};

struct GaugeFix {
    BitVec correction;
    BitVec gauge;
};

struct GaugeRoundRecord {
    size_t w = 0;
    size_t w0 = 0;
    size_t residual_weight = 0;
    size_t largest_cluster = 0;
    bool nonsyndrome = false;
    /// Logical class of the state after ideal decoding of its residual syndrome.
    bool logical = false;
    std::vector<size_t> cluster_sizes;
};

/// Decoders of a gauge color code, precomputed once and immutable afterwards.
///
/// Bit-flip errors are corrected from Z-type gauge outcomes; the code's self-duality
/// makes the phase-flip path its mirror image.
class GaugeDecoder {
   public:
    explicit GaugeDecoder(
        std::shared_ptr<const GaugeColorCode> code, ReductionInput::Weights weights = ReductionInput::Weights::LIGHTER_OF_BOTH);

    const GaugeColorCode &code() const {
        return *code_;
    }
    const MatchingReduction &repair_reduction() const {
        return *repair_;
    }
    const MatchingReduction &decode_reduction() const {
        return *decode_;
    }

    /// Repair syndrome bits (two per internal vertex) encoding a charge map.
    BitVec repair_bits(const ChargeMap &charge) const;
    /// Edge set delta0 with measured + delta0 valid; depends only on the charge of `measured`.
    /// The matching result is shrunk by adding single-qubit fluxes while that lowers its weight.
    /// Throws NonSyndromeEvent when the charge cannot be neutralized.
    FluxConfig repair_gauge_syndrome(const FluxConfig &measured) const;
    /// Flip set whose vertex syndrome equals sigma. Throws std::invalid_argument if sigma
    /// is set on a vertex without a stabilizer and NonSyndromeEvent if no matching exists.
    BitVec decode_syndrome(const VertexSyndrome &sigma) const;
    /// Independent repair of each of the six label classes.
    FluxConfig simplified_flux_repair(const FluxConfig &measured) const;
    /// Flip set inside the cells touched by gamma with the syndrome of gamma.
    KWitness k_confinement_witness(const FluxConfig &gamma) const;
    /// Per-component charge neutrality of a valid flux.
    std::vector<NeutralityComponent> neutrality(const FluxConfig &gamma) const;
    /// Correction with syndrome equal to that of the valid flux `repaired`, and a gauge
    /// operator making the post-fix flux of a state with flux `true_flux` equal to
    /// repaired + true_flux. Throws NonSyndromeEvent on a global constraint violation.
    GaugeFix gauge_fix(const FluxConfig &repaired) const;
    /// Logical class after ideal decoding of the state's own syndrome.
    /// Throws NonSyndromeEvent if the ideal decoder cannot match.
    bool logical_flag(const BitVec &state) const;
    /// One noisy round: flips at rate lambda, measurement outcome flips at rate eta,
    /// repair, decode and gauge fix. On a NonSyndromeEvent the state is left and flagged.
    GaugeRoundRecord single_shot_round(BitVec &state, double lambda, double eta, Rng &rng) const;

   private:
    void polish_repair(FluxConfig &delta0) const;

    std::shared_ptr<const GaugeColorCode> code_;
    std::vector<std::vector<uint32_t>> qubit_flux_;
    std::unique_ptr<MatchingReduction> repair_;
    std::unique_ptr<MatchingReduction> decode_;
    std::vector<int64_t> decode_bit_;
    std::unique_ptr<Gf2Span> plaquette_flux_;
    std::array<Graph, 6> label_graphs_{Graph(0), Graph(0), Graph(0), Graph(0), Graph(0), Graph(0)};
    std::array<std::vector<size_t>, 6> label_edges_;
    std::vector<size_t> externals_;
    BitVec z_logical_;
};

}  // namespace singleshot

#endif
