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

#include "singleshot/noise/pauli_channel.h"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "singleshot/pauli/code_io.h"

namespace singleshot {

namespace {

void check_rate(double rate) {
    if (!(rate >= 0 && rate <= 1)) {
        throw std::invalid_argument("Channel rate must lie in [0, 1].");
    }
}

PauliChannel from_accumulators(size_t n, const std::map<PauliOperator, KahanSum> &acc) {
    std::vector<ChannelEntry> entries;
    for (const auto &[error, total] : acc) {
        entries.push_back({total.value(), error});
    }
    return PauliChannel::explicit_channel(n, entries);
}

}  // namespace

PauliChannel PauliChannel::explicit_channel(size_t n, const std::vector<ChannelEntry> &entries) {
    std::map<PauliOperator, KahanSum> merged;
    KahanSum total;
    for (const auto &e : entries) {
        if (e.error.num_qubits() != n) {
            throw std::invalid_argument("Channel entry has the wrong qubit count.");
        }
        if (!(e.probability >= 0)) {
            throw std::invalid_argument("Channel probabilities must be nonnegative.");
        }
        merged[e.error].add(e.probability);
        total.add(e.probability);
    }
    if (std::abs(total.value() - 1) > 1e-12) {
        throw std::invalid_argument("Channel probabilities sum to " + std::to_string(total.value()) + ", not 1.");
    }
    PauliChannel c;
    c.mode_ = ChannelMode::EXPLICIT;
    c.n_ = n;
    for (const auto &[error, p] : merged) {
        if (p.value() > 0) {
            c.entries_.push_back({p.value(), error});
        }
    }
    return c;
}

PauliChannel PauliChannel::iid_flip(size_t n, double rate) {
    check_rate(rate);
    PauliChannel c;
    c.mode_ = ChannelMode::IID_FLIP;
    c.n_ = n;
    c.rate_ = rate;
    return c;
}

PauliChannel PauliChannel::iid_depolarizing(size_t n, double rate) {
    check_rate(rate);
    PauliChannel c;
    c.mode_ = ChannelMode::IID_DEPOLARIZING;
    c.n_ = n;
    c.rate_ = rate;
    return c;
}

PauliChannel PauliChannel::identity(size_t n) {
    return explicit_channel(n, {{1.0, PauliOperator(n)}});
}

PauliChannel PauliChannel::expand() const {
    if (mode_ == ChannelMode::EXPLICIT) {
        return *this;
    }
    if (n_ > 12) {
        throw std::invalid_argument("Refusing to expand an iid channel on more than 12 qubits.");
    }
    // Per-qubit options: (probability, letter).
    std::vector<std::pair<double, char>> options;
    if (mode_ == ChannelMode::IID_FLIP) {
        options = {{1 - rate_, 'I'}, {rate_, 'X'}};
    } else {
        options = {{1 - rate_, 'I'}, {rate_ / 3, 'X'}, {rate_ / 3, 'Y'}, {rate_ / 3, 'Z'}};
    }
    std::vector<ChannelEntry> entries{{1.0, PauliOperator(n_)}};
    for (size_t q = 0; q < n_; q++) {
        std::vector<ChannelEntry> next;
        for (const auto &e : entries) {
            for (const auto &[p, letter] : options) {
                if (p == 0) {
                    continue;
                }
                PauliOperator err = e.error;
                if (letter != 'I') {
                    err *= PauliOperator::single(n_, q, letter);
                }
                next.push_back({e.probability * p, err});
            }
        }
        entries = std::move(next);
    }
    return explicit_channel(n_, entries);
}

double PauliChannel::probability_of(const PauliOperator &e) const {
    PauliChannel ex = expand();
    for (const auto &entry : ex.entries_) {
        if (entry.error == e) {
            return entry.probability;
        }
    }
    return 0;
}

PauliOperator sample(const PauliChannel &channel, Rng &rng) {
    size_t n = channel.n();
    switch (channel.mode()) {
        case ChannelMode::IID_FLIP:
            return PauliOperator(random_bits(n, channel.rate(), rng), BitVec(n));
        case ChannelMode::IID_DEPOLARIZING: {
            PauliOperator e(n);
            BitVec hit = random_bits(n, channel.rate(), rng);
            for (size_t q : hit.ones()) {
                uint64_t kind = rng.below(3);
                if (kind != 2) {
                    e.xs.flip(q);
                }
                if (kind != 0) {
                    e.zs.flip(q);
                }
            }
            return e;
        }
        default: {
            double u = rng.uniform();
            double acc = 0;
            for (const auto &entry : channel.entries()) {
                acc += entry.probability;
                if (u < acc) {
                    return entry.error;
                }
            }
            return channel.entries().back().error;
        }
    }
}

PauliOperator sample(const PauliChannel &channel, uint64_t seed) {
    Rng rng(seed);
    return sample(channel, rng);
}

PauliChannel compose(const PauliChannel &a, const PauliChannel &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("compose: channels act on different qubit counts.");
    }
    PauliChannel ea = a.expand();
    PauliChannel eb = b.expand();
    std::map<PauliOperator, KahanSum> acc;
    for (const auto &x : ea.entries()) {
        for (const auto &y : eb.entries()) {
            acc[x.error * y.error].add(x.probability * y.probability);
        }
    }
    return from_accumulators(a.n(), acc);
}

double fail_probability_exact(const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table) {
    if (channel.mode() != ChannelMode::EXPLICIT) {
        throw std::invalid_argument("fail_probability_exact needs an explicit channel; use the Monte Carlo estimator.");
    }
    KahanSum total;
    for (const auto &entry : channel.entries()) {
        if (!decompose(entry.error, code, table).logical_part.is_identity()) {
            total.add(entry.probability);
        }
    }
    return total.value();
}

FailEstimate fail_probability_monte_carlo(
    const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table, size_t samples, uint64_t seed) {
    Rng rng(seed);
    size_t failures = 0;
    for (size_t k = 0; k < samples; k++) {
        if (!decompose(sample(channel, rng), code, table).logical_part.is_identity()) {
            failures++;
        }
    }
    return {failures, samples, samples ? (double)failures / (double)samples : 0.0, wilson_interval(failures, samples)};
}

PauliChannel reduce_channel(const PauliChannel &channel, const SubsystemCode &code, const CorrectionTable &table) {
    PauliChannel ex = channel.expand();
    std::map<PauliOperator, KahanSum> acc;
    for (const auto &entry : ex.entries()) {
        acc[table.lookup(syndrome_of(entry.error, code))].add(entry.probability);
    }
    return from_accumulators(channel.n(), acc);
}

std::map<BitVec, double> syndrome_distribution(const PauliChannel &channel, const SubsystemCode &code) {
    PauliChannel ex = channel.expand();
    std::map<BitVec, KahanSum> acc;
    for (const auto &entry : ex.entries()) {
        acc[syndrome_of(entry.error, code)].add(entry.probability);
    }
    std::map<BitVec, double> out;
    for (const auto &[s, p] : acc) {
        out[s] = p.value();
    }
    return out;
}

std::string write_channel_text(const PauliChannel &channel) {
    PauliChannel ex = channel.expand();
    std::ostringstream out;
    out.precision(17);
    out << ex.n() << ' ' << ex.entries().size() << "\n[CHANNEL]\n";
    for (const auto &entry : ex.entries()) {
        out << entry.probability << ' ' << format_pauli_sparse(entry.error) << '\n';
    }
    return out.str();
}

PauliChannel parse_channel_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    bool in_section = false;
    size_t n = 0, count = 0;
    std::vector<ChannelEntry> entries;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            std::istringstream hs(line);
            if (!(hs >> n >> count)) {
                throw std::invalid_argument("Channel text: expected header '<n> <entries>'.");
            }
            have_header = true;
            continue;
        }
        if (line == "[CHANNEL]") {
            in_section = true;
            continue;
        }
        if (!in_section) {
            throw std::invalid_argument("Channel text: entry before [CHANNEL].");
        }
        std::istringstream ls(line);
        double p;
        std::string op;
        if (!(ls >> p >> op)) {
            throw std::invalid_argument("Channel text: malformed entry '" + line + "'.");
        }
        entries.push_back({p, parse_pauli_sparse(op, n)});
    }
    if (entries.size() != count) {
        throw std::invalid_argument("Channel text: header entry count does not match.");
    }
    return PauliChannel::explicit_channel(n, entries);
}

PauliChannel channel_from_json(const std::string &json_text, size_t n) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw std::invalid_argument("channel.kind: missing or not a string.");
    }
    std::string kind = j["kind"];
    if (kind == "identity") {
        return PauliChannel::identity(n);
    }
    if (!j.contains("lambda") || !j["lambda"].is_number()) {
        throw std::invalid_argument("channel.lambda: missing or not a number.");
    }
    double rate = j["lambda"];
    if (kind == "iid-flip") {
        return PauliChannel::iid_flip(n, rate);
    }
    if (kind == "iid-depolarizing") {
        return PauliChannel::iid_depolarizing(n, rate);
    }
    throw std::invalid_argument("channel.kind: unknown kind '" + kind + "'.");
}

}  // namespace singleshot
