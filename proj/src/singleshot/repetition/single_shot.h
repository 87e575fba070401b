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

#ifndef _SINGLESHOT_REPETITION_SINGLE_SHOT_H
#define _SINGLESHOT_REPETITION_SINGLE_SHOT_H

#include "singleshot/repetition/torus_lattice.h"
#include "singleshot/util/rng.h"

namespace singleshot {

struct IsingRoundRecord {
    size_t w = 0;
    size_t w0 = 0;
    size_t residual_weight = 0;
    size_t largest_cluster = 0;
    bool nonsyndrome = false;
    /// Encoded-bit class of the state after ideal decoding of its residual syndrome.
    bool logical = false;
    std::vector<size_t> cluster_sizes;
};

/// Face-set class after ideal (smaller-side) decoding of its own boundary.
bool ideal_logical_flag(const TorusLattice &lattice, const FaceSet &state);

/// One noisy round: face flips at rate lambda, edge outcome flips at rate eta, closure, decode.
/// On a NonSyndromeEvent the state is left uncorrected and the record flags it.
IsingRoundRecord single_shot_round(const TorusLattice &lattice, FaceSet &state, double lambda, double eta, Rng &rng);

/// Reads every face with flip probability eta and returns the global majority (ties read 0).
bool logical_readout(const TorusLattice &lattice, const FaceSet &state, double eta, Rng &rng);

}  // namespace singleshot

#endif
