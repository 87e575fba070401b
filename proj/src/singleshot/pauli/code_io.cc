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

#include "singleshot/pauli/code_io.h"

#include <sstream>

namespace singleshot {

namespace {

std::string join_indices(const BitVec &bits) {
    std::string out;
    for (size_t k : bits.ones()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(k);
    }
    return out;
}

BitVec parse_indices(const std::string &text, size_t n) {
    BitVec bits(n);
    if (text.empty()) {
        return bits;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("Malformed qubit index '" + item + "'.");
        }
        size_t k = std::stoull(item);
        if (k >= n) {
            throw std::invalid_argument("Qubit index " + item + " out of range.");
        }
        if (bits[k]) {
            throw std::invalid_argument("Duplicate qubit index " + item + ".");
        }
        bits.flip(k);
    }
    return bits;
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_pauli_sparse(const PauliOperator &p) {
    return "X:" + join_indices(p.xs) + ";Z:" + join_indices(p.zs);
}

PauliOperator parse_pauli_sparse(const std::string &text, size_t n) {
    std::string t = trim(text);
    size_t semi = t.find(';');
    if (t.rfind("X:", 0) != 0 || semi == std::string::npos || t.compare(semi + 1, 2, "Z:") != 0) {
        throw std::invalid_argument("Expected 'X:<indices>;Z:<indices>', got '" + t + "'.");
    }
    return PauliOperator(parse_indices(t.substr(2, semi - 2), n), parse_indices(t.substr(semi + 3), n));
}

std::string write_code_text(const SubsystemCode &code) {
    std::ostringstream out;
    out << code.n() << ' ' << code.num_logical_qubits();
    if (code.distance().has_value()) {
        out << " distance=" << *code.distance();
    }
    out << '\n';
    out << "[STAB]\n";
    for (const auto &p : code.stab_gens()) {
        out << format_pauli_sparse(p) << '\n';
    }
    out << "[GAUGE]\n";
    for (const auto &p : code.gauge_gens()) {
        out << format_pauli_sparse(p) << '\n';
    }
    out << "[LOGICAL]\n";
    for (const auto &p : code.logical_reps()) {
        out << format_pauli_sparse(p) << '\n';
    }
    return out.str();
}

SubsystemCode parse_code_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> distance;
    std::vector<PauliOperator> sections[3];
    int section = -1;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            throw std::invalid_argument("Line " + std::to_string(line_number) + ": " + msg);
        };
        if (!have_header) {
            std::istringstream hs(line);
            if (!(hs >> n >> k)) {
                fail("expected header '<n> <k>'.");
            }
            std::string extra;
            while (hs >> extra) {
                if (extra.rfind("distance=", 0) == 0) {
                    distance = std::stoull(extra.substr(9));
                } else {
                    fail("unknown header field '" + extra + "'.");
                }
            }
            have_header = true;
            continue;
        }
        if (line == "[STAB]") {
            section = 0;
        } else if (line == "[GAUGE]") {
            section = 1;
        } else if (line == "[LOGICAL]") {
            section = 2;
        } else {
            if (section < 0) {
                fail("generator before any section header.");
            }
            try {
                sections[section].push_back(parse_pauli_sparse(line, n));
            } catch (const std::invalid_argument &ex) {
                fail(ex.what());
            }
        }
    }
    if (!have_header) {
        throw std::invalid_argument("Code text is empty.");
    }
    if (sections[2].size() != 2 * k) {
        throw std::invalid_argument("Header declares k=" + std::to_string(k) + " but found " +
                                    std::to_string(sections[2].size()) + " logical representatives.");
    }
    return SubsystemCode(n, sections[0], sections[1], sections[2], distance);
}

}  // namespace singleshot
