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

#ifndef _SINGLESHOT_NOISE_PAULI_CHANNEL_H
#define _SINGLESHOT_NOISE_PAULI_CHANNEL_H

#include <map>
#include <string>
#include <vector>

#include "singleshot/pauli/subsystem_code.h"
#include "singleshot/util/rng.h"
#include "singleshot/util/stats.h"

namespace singleshot {

enum class ChannelMode {
    EXPLICIT,
    IID_FLIP,
    IID_DEPOLARIZING,
};

struct ChannelEntry {
    double probability;
    PauliOperator error;
};

/// A Pauli channel: either an explicit distribution over Pauli errors or an
/// independent per-qubit model.
class PauliChannel {
   public:
    /// Merges duplicate errors and drops zero-probability entries (entries sorted by error).
    /// Throws std::invalid_argument if probabilities are negative or do not sum to 1 within 1e-12.
    static PauliChannel explicit_channel(size_t n, const std::vector<ChannelEntry> &entries);
    /// X on each qubit independently with probability `rate`.
    static PauliChannel iid_flip(size_t n, double rate);
    /// X, Y, Z on each qubit independently with probability rate/3 each.
    static PauliChannel iid_depolarizing(size_t n, double rate);
    static PauliChannel identity(size_t n);

    ChannelMode mode() const {
        return mode_;
    }
    size_t n() const {
        return n_;
    }
    double rate() const {
        return rate_;
    }
    const std::vector<ChannelEntry> &entries() const {
        return entries_;
    }

    /// Explicit form of an iid channel (n <= 12); explicit channels are returned unchanged.
    PauliChannel expand() const;
    /// Probability assigned to a specific error (explicit form only).
    double probability_of(const PauliOperator &e) const;

   private:
    ChannelMode mode_ = ChannelMode::EXPLICIT;
    size_t n_ = 0;
    double rate_ = 0;
    std::vector<ChannelEntry> entries_;
};

PauliOperator sample(const PauliChannel &channel, Rng &rng);
PauliOperator sample(const PauliChannel &channel, uint64_t seed);

/// Convolution of two explicit channels (iid channels are expanded first).
PauliChannel compose(const PauliChannel &a, const PauliChannel &b);

/// Probability that ideal correction with `table` leaves a nontrivial logical.
/// Throws std::invalid_argument for iid channels.
double fail_probability_exact(const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table);

/// Monte Carlo failure estimate for any channel.
struct FailEstimate {
    size_t failures;
    size_t samples;
    double rate;
    Interval ci;
};
FailEstimate fail_probability_monte_carlo(
    const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table, size_t samples, uint64_t seed);

/// Replaces every error E with F(sigma(E)), merging equal syndromes.
PauliChannel reduce_channel(const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table);

/// Distribution of syndromes induced by an explicit channel.
std::map<BitVec, double> syndrome_distribution(const PauliChannel &channel, const SubsystemCode &code);

/// Text form: header `<n> <entries>`, section `[CHANNEL]`, lines `<probability> X:...;Z:...`.
std::string write_channel_text(const PauliChannel &channel);
PauliChannel parse_channel_text(const std::string &text);

/// Parses `{"kind": "iid-flip", "lambda": 0.03}` style channel specs
/// (kinds: iid-flip, iid-depolarizing, identity).
PauliChannel channel_from_json(const std::string &json_text, size_t n);

}  // namespace singleshot

#endif
