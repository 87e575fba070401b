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

#include "singleshot/repetition/single_shot.h"

#include <algorithm>

namespace singleshot {

namespace {

void check_rate(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string("single_shot_round: ") + name + " must lie in [0,1].");
    }
}

}  // namespace

bool ideal_logical_flag(const TorusLattice &lattice, const FaceSet &state) {
    EdgeSet syndrome = boundary(lattice, state);
    FaceSet clean = state;
    try {
        clean ^= decode(lattice, syndrome);
    } catch (const NonSyndromeEvent &) {
        // Components wrap individually but not jointly: fall back to the global smaller side.
        return logical_class(lattice, state).logical;
    }
    return clean.popcount() == lattice.num_faces() && clean.popcount() > 0;
}

IsingRoundRecord single_shot_round(const TorusLattice &lattice, FaceSet &state, double lambda, double eta, Rng &rng) {
    check_rate(lambda, "lambda");
    check_rate(eta, "eta");
    IsingRoundRecord rec;
    flip_random_bits(state, lambda, rng);
    EdgeSet truth = boundary(lattice, state);
    EdgeSet w = random_bits(lattice.num_edges(), eta, rng);
    EdgeSet measured = truth ^ w;
    EdgeSet w0 = close_pseudo_syndrome(lattice, measured);
    rec.w = w.popcount();
    rec.w0 = w0.popcount();
    EdgeSet repaired = measured ^ w0;
    try {
        state ^= decode(lattice, repaired);
    } catch (const NonSyndromeEvent &) {
        rec.nonsyndrome = true;
    }
    EdgeSet residual = boundary(lattice, state);
    rec.residual_weight = residual.popcount();
    rec.cluster_sizes = edge_cluster_sizes(lattice, residual);
    for (size_t s : rec.cluster_sizes) {
        rec.largest_cluster = std::max(rec.largest_cluster, s);
    }
    rec.logical = ideal_logical_flag(lattice, state);
    return rec;
}

bool logical_readout(const TorusLattice &lattice, const FaceSet &state, double eta, Rng &rng) {
    check_rate(eta, "eta");
    FaceSet read = state;
    flip_random_bits(read, eta, rng);
    return 2 * read.popcount() > lattice.num_faces();
}

}  // namespace singleshot
