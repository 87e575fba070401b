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

#include "singleshot/pauli/subsystem_code.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "singleshot/pauli/code_families.h"
#include "singleshot/pauli/code_io.h"

using namespace singleshot;

namespace {

PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        if (rng() & 1) {
            p.xs.flip(q);
        }
        if (rng() & 1) {
            p.zs.flip(q);
        }
    }
    return p;
}

// A small non-CSS stabilizer code: the [[5,1,3]] perfect code.
SubsystemCode five_qubit_code() {
    std::vector<PauliOperator> stabs;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        stabs.push_back(PauliOperator::from_string(s));
    }
    std::vector<PauliOperator> logicals{PauliOperator::from_string("XXXXX"), PauliOperator::from_string("ZZZZZ")};
    return SubsystemCode(5, stabs, stabs, logicals);
}

}  // namespace

TEST(subsystem_code, families_validate) {
    repetition_code(3, false).validate();
    repetition_code(7, true).validate();
    five_qubit_code().validate();
    EXPECT_TRUE(repetition_code(4, false).css());
    EXPECT_FALSE(five_qubit_code().css());
}

TEST(subsystem_code, validate_rejects_broken_codes) {
    auto stabs = std::vector<PauliOperator>{PauliOperator::from_string("ZZ")};
    auto bad_logicals = std::vector<PauliOperator>{PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")};
    EXPECT_THROW(SubsystemCode(2, stabs, stabs, bad_logicals).validate(), std::invalid_argument);
    auto not_in_gauge = SubsystemCode(2, stabs, {}, {});
    EXPECT_THROW(not_in_gauge.validate(), std::invalid_argument);
}

TEST(subsystem_code, syndrome_identity_and_homomorphism) {
    std::mt19937_64 rng(1);
    for (const auto &code : {repetition_code(6, true), five_qubit_code()}) {
        EXPECT_TRUE(syndrome_of(PauliOperator(code.n()), code).none());
        EXPECT_TRUE(gauge_syndrome_of(PauliOperator(code.n()), code).none());
        for (int k = 0; k < 200; k++) {
            auto a = random_pauli(code.n(), rng);
            auto b = random_pauli(code.n(), rng);
            EXPECT_EQ(syndrome_of(a * b, code), syndrome_of(a, code) ^ syndrome_of(b, code));
        }
    }
    EXPECT_THROW(syndrome_of(PauliOperator(4), repetition_code(3, false)), std::invalid_argument);
}

TEST(subsystem_code, validity_matches_bruteforce_reachability) {
    for (size_t n = 3; n <= 10; n++) {
        auto code = repetition_code(n, true);
        std::set<std::string> reachable;
        // Z errors are invisible to these checks, so bit-flip patterns reach every syndrome.
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
            PauliOperator e(n);
            for (size_t q = 0; q < n; q++) {
                if ((mask >> q) & 1) {
                    e.xs.flip(q);
                }
            }
            reachable.insert(syndrome_of(e, code).str());
        }
        size_t m = code.stab_gens().size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
            StabSyndrome s(m);
            for (size_t i = 0; i < m; i++) {
                if ((mask >> i) & 1) {
                    s.flip(i);
                }
            }
            EXPECT_EQ(is_valid_syndrome(s, code), reachable.count(s.str()) > 0);
        }
        StabSyndrome single(m);
        single.flip(0);
        EXPECT_FALSE(is_valid_syndrome(single, code));
    }
}

TEST(subsystem_code, validity_matches_full_pauli_enumeration) {
    auto code = five_qubit_code();
    std::set<std::string> reachable;
    for (uint64_t mask = 0; mask < (uint64_t{1} << 10); mask++) {
        PauliOperator e(5);
        for (size_t q = 0; q < 5; q++) {
            if ((mask >> q) & 1) {
                e.xs.flip(q);
            }
            if ((mask >> (q + 5)) & 1) {
                e.zs.flip(q);
            }
        }
        reachable.insert(syndrome_of(e, code).str());
    }
    for (uint64_t mask = 0; mask < 16; mask++) {
        StabSyndrome s(4);
        for (size_t i = 0; i < 4; i++) {
            if ((mask >> i) & 1) {
                s.flip(i);
            }
        }
        EXPECT_EQ(is_valid_syndrome(s, code), reachable.count(s.str()) > 0);
    }
}

TEST(subsystem_code, canonical_correction_has_requested_syndrome) {
    std::mt19937_64 rng(4);
    auto code = five_qubit_code();
    for (int k = 0; k < 100; k++) {
        auto e = random_pauli(5, rng);
        auto s = syndrome_of(e, code);
        EXPECT_EQ(syndrome_of(canonical_correction(s, code), code), s);
    }
    auto ring = repetition_code(5, true);
    StabSyndrome odd(5);
    odd.flip(2);
    EXPECT_THROW(canonical_correction(odd, ring), std::invalid_argument);
}

TEST(subsystem_code, decompose_round_trip) {
    std::mt19937_64 rng(8);
    for (const auto &code : {repetition_code(5, false), five_qubit_code()}) {
        CorrectionTable table(code);
        for (int k = 0; k < 300; k++) {
            auto e = random_pauli(code.n(), rng);
            auto d = decompose(e, code, table);
            EXPECT_EQ(d.corr * d.gauge_part * d.logical_part, e);
            EXPECT_EQ(syndrome_of(d.corr, code), syndrome_of(e, code));
        }
        // E = F(sigma) alone has trivial gauge and logical parts.
        auto f = table.lookup(syndrome_of(random_pauli(code.n(), rng), code));
        auto d = decompose(f, code, table);
        EXPECT_TRUE(d.gauge_part.is_identity());
        EXPECT_TRUE(d.logical_part.is_identity());
        auto with_logical = f * code.logical_reps()[0];
        EXPECT_EQ(decompose(with_logical, code, table).logical_part, code.logical_reps()[0]);
    }
}

TEST(subsystem_code, explicit_table_reports_missing_entries) {
    auto code = repetition_code(3, false);
    auto table = CorrectionTable::explicit_only(code);
    table.set(StabSyndrome(2), PauliOperator(3));
    EXPECT_NO_THROW(table.lookup(StabSyndrome(2)));
    EXPECT_THROW(table.lookup(StabSyndrome::from_string("10")), IncompleteTableError);
    EXPECT_THROW(table.set(StabSyndrome::from_string("10"), PauliOperator(3)), std::invalid_argument);
}

TEST(subsystem_code, min_weight_table_is_majority_vote) {
    auto code = repetition_code(3, false);
    auto table = build_min_weight_table(code, 1);
    EXPECT_EQ(table.lookup(StabSyndrome::from_string("10")).str(), "XII");
    EXPECT_EQ(table.lookup(StabSyndrome::from_string("11")).str(), "IXI");
    EXPECT_EQ(table.lookup(StabSyndrome::from_string("01")).str(), "IIX");
    EXPECT_TRUE(table.lookup(StabSyndrome(2)).is_identity());
}

TEST(subsystem_code, css_parts_are_independent) {
    std::mt19937_64 rng(13);
    auto code = repetition_code(8, true);
    for (int k = 0; k < 100; k++) {
        auto e = random_pauli(8, rng);
        PauliOperator x_only(e.xs, BitVec(8));
        EXPECT_EQ(syndrome_of(x_only, code), syndrome_of(e, code));
    }
}

TEST(subsystem_code, distance_bruteforce) {
    EXPECT_EQ(code_distance_bruteforce(repetition_code(3, false), 3, ErrorBasis::X_ONLY), 3u);
    EXPECT_EQ(code_distance_bruteforce(repetition_code(3, false), 3, ErrorBasis::ALL), 1u);
    EXPECT_EQ(code_distance_bruteforce(repetition_code(5, false), 3, ErrorBasis::X_ONLY), std::nullopt);
    EXPECT_EQ(code_distance_bruteforce(five_qubit_code(), 3), 3u);
    EXPECT_THROW(code_distance_bruteforce(repetition_code(200, false), 6), ResourceError);
}

TEST(code_io, round_trip_is_bit_exact) {
    for (const auto &code : {repetition_code(4, true), five_qubit_code()}) {
        std::string text = write_code_text(code);
        SubsystemCode parsed = parse_code_text(text);
        EXPECT_EQ(parsed.n(), code.n());
        EXPECT_EQ(parsed.stab_gens(), code.stab_gens());
        EXPECT_EQ(parsed.gauge_gens(), code.gauge_gens());
        EXPECT_EQ(parsed.logical_reps(), code.logical_reps());
        EXPECT_EQ(write_code_text(parsed), text);
    }
}

TEST(code_io, format_and_errors) {
    auto p = PauliOperator::from_string("XYIZ");
    EXPECT_EQ(format_pauli_sparse(p), "X:0,1;Z:1,3");
    EXPECT_EQ(parse_pauli_sparse("X:0,1;Z:1,3", 4), p);
    EXPECT_EQ(parse_pauli_sparse("X:;Z:", 4), PauliOperator(4));
    EXPECT_THROW(parse_pauli_sparse("X:9;Z:", 4), std::invalid_argument);
    EXPECT_THROW(parse_pauli_sparse("Z:1", 4), std::invalid_argument);
    EXPECT_THROW(parse_code_text("3 1\nX:0;Z:\n"), std::invalid_argument);
    EXPECT_THROW(parse_code_text("3 1\n[STAB]\n[LOGICAL]\nX:0;Z:\n"), std::invalid_argument);
    auto with_distance = parse_code_text("2 0 distance=2\n[STAB]\nX:;Z:0,1\n[GAUGE]\nX:;Z:0,1\n[LOGICAL]\n");
    EXPECT_EQ(with_distance.distance(), 2u);
}

TEST(code_families, logical_structure) {
    auto ring = repetition_code(6, true);
    auto s = find_logical_structure(6, ring.stab_gens(), ring.gauge_gens());
    EXPECT_TRUE(s.extra_stabilizers.empty());
    ASSERT_EQ(s.pairs.size(), 2u);
    EXPECT_FALSE(commutes(s.pairs[0], s.pairs[1]));
    for (const auto &p : s.pairs) {
        for (const auto &g : ring.gauge_gens()) {
            EXPECT_TRUE(commutes(p, g));
        }
    }
    auto missing = find_logical_structure(6, {}, ring.gauge_gens());
    EXPECT_EQ(missing.extra_stabilizers.size(), 5u);
    EXPECT_EQ(missing.pairs.size(), 2u);
    auto five = five_qubit_code();
    auto f = find_logical_structure(5, five.stab_gens(), five.gauge_gens());
    EXPECT_EQ(f.pairs.size(), 2u);
    EXPECT_FALSE(commutes(f.pairs[0], f.pairs[1]));
}
