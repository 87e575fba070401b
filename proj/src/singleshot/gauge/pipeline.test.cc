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

#include <chrono>
#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "singleshot/colex/builders.h"
#include "singleshot/oracle/coset.h"
#include "singleshot/oracle/minimal_repair.h"

using namespace singleshot;

namespace {

std::shared_ptr<const GaugeColorCode> tetra(size_t d) {
    static std::map<size_t, std::shared_ptr<const GaugeColorCode>> cache;
    auto &slot = cache[d];
    if (!slot) {
        slot = std::make_shared<GaugeColorCode>(build_tetrahedral(d));
    }
    return slot;
}

const GaugeDecoder &decoder(size_t d) {
    static std::map<size_t, std::unique_ptr<GaugeDecoder>> cache;
    auto &slot = cache[d];
    if (!slot) {
        slot = std::make_unique<GaugeDecoder>(tetra(d));
    }
    return *slot;
}

BitVec random_set(size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    BitVec v(n);
    for (size_t k = 0; k < n; k++) {
        if (coin(rng)) {
            v.flip(k);
        }
    }
    return v;
}

/// Per single color, the edges whose label contains it have even degree at every internal vertex.
bool flux_parity_oracle(const DualLattice &dual, const BitVec &edges) {
    for (int c = 0; c < 4; c++) {
        std::vector<int> degree(dual.num_vertices(), 0);
        for (size_t e : edges.ones()) {
            if (dual.edge(e).label & (1 << c)) {
                degree[dual.edge(e).u] ^= 1;
                degree[dual.edge(e).v] ^= 1;
            }
        }
        for (size_t v = 0; v < dual.num_internal(); v++) {
            if (degree[v]) {
                return false;
            }
        }
    }
    return true;
}

/// Qubits whose four tetrahedron vertices are all internal.
std::vector<size_t> bulk_qubits(const DualLattice &dual) {
    std::vector<size_t> out;
    for (size_t q = 0; q < dual.num_qubits(); q++) {
        bool bulk = true;
        for (uint32_t v : dual.qubit_vertices(q)) {
            bulk &= !dual.external(v);
        }
        if (bulk) {
            out.push_back(q);
        }
    }
    return out;
}

BitVec single(size_t n, size_t k) {
    BitVec v(n);
    v.flip(k);
    return v;
}

}  // namespace

TEST(gauge_code, charge_group_relations) {
    EXPECT_EQ(color_charge(0) ^ color_charge(1) ^ color_charge(2) ^ color_charge(3), 0);
    auto q = [](const char *s) { return label_charge(parse_color_set(s)); };
    EXPECT_EQ(q("gb") ^ q("by") ^ q("gy"), 0);
    EXPECT_EQ(q("rb") ^ q("by") ^ q("ry"), 0);
    EXPECT_EQ(q("rg") ^ q("gy") ^ q("ry"), 0);
    std::set<uint8_t> distinct;
    for (const char *s : {"rg", "gb", "by", "gy", "rb", "ry"}) {
        distinct.insert(q(s));
    }
    EXPECT_EQ(distinct.size(), 6u);
    EXPECT_THROW(label_charge(parse_color_set("rgb")), std::invalid_argument);
    EXPECT_THROW(color_charge(4), std::invalid_argument);
}

TEST(gauge_code, extract_gauge_syndrome) {
    auto code = tetra(5);
    size_t n = code->num_qubits();
    EXPECT_TRUE(code->extract_gauge_syndrome(PauliOperator(n)).none());
    PauliOperator with_z(n);
    with_z.zs.flip(0);
    EXPECT_THROW(code->extract_gauge_syndrome(with_z), std::invalid_argument);
    std::mt19937_64 rng(1);
    for (size_t d : {3, 5}) {
        auto c = tetra(d);
        for (int t = 0; t < 1000; t++) {
            PauliOperator e(random_set(c->num_qubits(), 0.02 + 0.3 * (t % 7) / 7.0, rng), BitVec(c->num_qubits()));
            FluxConfig gamma = c->extract_gauge_syndrome(e);
            ASSERT_TRUE(flux_parity_oracle(c->dual(), gamma));
            ASSERT_TRUE(c->is_valid_flux(gamma));
        }
    }
}

TEST(gauge_code, single_bulk_flip_has_four_colored_syndrome) {
    auto code = tetra(5);
    const auto &dual = code->dual();
    auto bulk = bulk_qubits(dual);
    ASSERT_FALSE(bulk.empty());
    for (size_t q : bulk) {
        auto points = code->branching_points(code->flux_of_flips(single(code->num_qubits(), q)));
        auto ones = points.ones();
        ASSERT_EQ(ones.size(), 4u);
        std::set<int> colors;
        for (size_t v : ones) {
            colors.insert(dual.color(v));
        }
        EXPECT_EQ(colors.size(), 4u);
    }
}

TEST(gauge_code, err_of_matches_stabilizer_syndrome) {
    std::mt19937_64 rng(2);
    for (size_t d : {3, 5}) {
        auto code = tetra(d);
        size_t n = code->num_qubits();
        std::vector<size_t> z_rows;
        const auto &stabs = code->code().stab_gens();
        for (size_t i = 0; i < stabs.size(); i++) {
            if (stabs[i].is_z_type()) {
                z_rows.push_back(i);
            }
        }
        ASSERT_EQ(z_rows.size(), code->num_z_stabilizers());
        EXPECT_TRUE(code->err_of(FluxConfig(code->num_edges())).none());
        for (int t = 0; t < 1000; t++) {
            BitVec flips = random_set(n, 0.05 + 0.2 * (t % 5) / 5.0, rng);
            StabSyndrome full = syndrome_of(PauliOperator(flips, BitVec(n)), code->code());
            StabSyndrome restricted(z_rows.size());
            for (size_t j = 0; j < z_rows.size(); j++) {
                restricted.set(j, full[z_rows[j]]);
            }
            ASSERT_EQ(code->err_of(code->flux_of_flips(flips)), restricted);
        }
    }
}

TEST(gauge_code, err_of_is_linear) {
    std::mt19937_64 rng(3);
    auto code = tetra(5);
    size_t n = code->num_qubits();
    for (int t = 0; t < 500; t++) {
        auto g1 = code->flux_of_flips(random_set(n, 0.1, rng));
        auto g2 = code->flux_of_flips(random_set(n, 0.1, rng));
        EXPECT_EQ(code->err_of(g1 ^ g2), code->err_of(g1) ^ code->err_of(g2));
        EXPECT_EQ(code->branching_points(g1 ^ g2), code->branching_points(g1) ^ code->branching_points(g2));
    }
    FluxConfig bad(code->num_edges());
    bad.flip(0);
    EXPECT_THROW(code->err_of(bad), std::invalid_argument);
}

TEST(gauge_code, charge_of_examples) {
    auto code = tetra(5);
    const auto &dual = code->dual();
    auto neutral = code->charge_of(code->flux_of_flips(single(code->num_qubits(), 3)));
    EXPECT_TRUE(std::all_of(neutral.begin(), neutral.end(), [](uint8_t c) { return c == 0; }));
    size_t rg_bulk = SIZE_MAX;
    for (size_t e = 0; e < dual.num_edges(); e++) {
        if (dual.edge(e).label == parse_color_set("rg") && !dual.external(dual.edge(e).u) &&
            !dual.external(dual.edge(e).v)) {
            rg_bulk = e;
            break;
        }
    }
    ASSERT_NE(rg_bulk, SIZE_MAX);
    auto charge = code->charge_of(single(dual.num_edges(), rg_bulk));
    EXPECT_EQ(charge[dual.edge(rg_bulk).u], label_charge(parse_color_set("rg")));
    EXPECT_EQ(charge[dual.edge(rg_bulk).v], label_charge(parse_color_set("rg")));
    EXPECT_EQ(std::count_if(charge.begin(), charge.end(), [](uint8_t c) { return c != 0; }), 2);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; t++) {
        BitVec edges(dual.num_edges());
        for (size_t e = 0; e < dual.num_edges(); e++) {
            if (!dual.external(dual.edge(e).u) && !dual.external(dual.edge(e).v) && (rng() & 1)) {
                edges.flip(e);
            }
        }
        uint8_t total = 0;
        for (uint8_t c : code->charge_of(edges)) {
            total ^= c;
        }
        EXPECT_EQ(total, 0);
        EXPECT_EQ(code->is_valid_flux(edges), flux_parity_oracle(dual, edges));
    }
}

TEST(gauge_reduction, lifts_reproduce_edge_nodes) {
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        for (const MatchingReduction *r : {&dec.repair_reduction(), &dec.decode_reduction()}) {
            for (size_t e = 0; e < r->num_edges(); e++) {
                BitVec lift(r->num_elementary());
                for (uint32_t x : r->edge(e).lift) {
                    lift.flip(x);
                }
                ASSERT_EQ(r->nodes_of_elementary(lift), r->edge_nodes(e)) << r->name() << " edge " << e;
                EXPECT_LE(r->edge(e).lift.size(), r->max_lift());
            }
            for (size_t x = 0; x < r->num_elementary(); x++) {
                BitVec sum(r->num_nodes());
                for (uint32_t e : r->split(x)) {
                    sum ^= r->edge_nodes(e);
                }
                ASSERT_EQ(sum, r->nodes_of_elementary(single(r->num_elementary(), x))) << r->name() << " error " << x;
                EXPECT_LE(r->split(x).size(), r->max_split());
            }
            std::mt19937_64 rng(5);
            for (int t = 0; t < 200; t++) {
                BitVec chosen = random_set(r->num_edges(), 0.2, rng);
                BitVec lifted(r->num_elementary());
                BitVec ends(r->num_nodes());
                for (size_t e : chosen.ones()) {
                    ends ^= r->edge_nodes(e);
                    for (uint32_t x : r->edge(e).lift) {
                        lifted.flip(x);
                    }
                }
                ASSERT_EQ(r->nodes_of_elementary(lifted), ends);
            }
        }
    }
}

TEST(gauge_reduction, constants_are_bounded_across_sizes) {
    for (size_t d : {3, 5, 7}) {
        const auto &dec = decoder(d);
        EXPECT_LE(dec.repair_reduction().max_split(), 3u);
        EXPECT_LE(dec.decode_reduction().max_split(), 3u);
        EXPECT_LE(dec.repair_reduction().max_lift(), 4u);
        EXPECT_LE(dec.decode_reduction().max_lift(), 4u);
    }
    EXPECT_EQ(decoder(5).repair_reduction().max_split(), decoder(7).repair_reduction().max_split());
    EXPECT_EQ(decoder(5).decode_reduction().max_split(), decoder(7).decode_reduction().max_split());
}

TEST(gauge_reduction, export_text_sections) {
    std::string text = decoder(3).repair_reduction().export_text();
    for (const char *section : {"[NODE]", "[EDGE]", "[LIFT]"}) {
        EXPECT_NE(text.find(section), std::string::npos) << section;
    }
    EXPECT_NE(text.find("max_split=3"), std::string::npos);
}

TEST(gauge_repair, valid_input_needs_nothing) {
    std::mt19937_64 rng(6);
    const auto &dec = decoder(5);
    const auto &code = dec.code();
    EXPECT_TRUE(dec.repair_gauge_syndrome(FluxConfig(code.num_edges())).none());
    for (int t = 0; t < 50; t++) {
        auto gamma = code.flux_of_flips(random_set(code.num_qubits(), 0.1, rng));
        EXPECT_TRUE(dec.repair_gauge_syndrome(gamma).none());
    }
}

TEST(gauge_repair, single_flipped_outcome_is_undone) {
    std::mt19937_64 rng(7);
    for (size_t d : {3, 5, 7}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        for (size_t e = 0; e < code.num_edges(); e++) {
            auto gamma = code.flux_of_flips(random_set(code.num_qubits(), 0.05, rng));
            auto measured = gamma ^ single(code.num_edges(), e);
            ASSERT_EQ(dec.repair_gauge_syndrome(measured), single(code.num_edges(), e)) << "d=" << d << " edge " << e;
        }
    }
}

TEST(gauge_repair, output_repairs_and_depends_only_on_charge) {
    std::mt19937_64 rng(8);
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        for (int t = 0; t < 300; t++) {
            auto measured = random_set(code.num_edges(), 0.02 + 0.2 * (t % 4) / 4.0, rng);
            auto delta0 = dec.repair_gauge_syndrome(measured);
            ASSERT_TRUE(code.is_valid_flux(measured ^ delta0));
            auto shifted = measured ^ code.flux_of_flips(random_set(code.num_qubits(), 0.2, rng));
            ASSERT_EQ(dec.repair_gauge_syndrome(shifted), delta0);
        }
    }
}

TEST(gauge_repair, within_constant_of_exact_minimum) {
    std::mt19937_64 rng(9);
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        const auto &dual = code.dual();
        Graph graph(dual.num_vertices());
        std::vector<uint8_t> labels;
        for (const auto &e : dual.edges()) {
            graph.add_edge(e.u, e.v);
            labels.push_back(label_charge(e.label));
        }
        std::vector<size_t> absorbers;
        for (size_t v = dual.num_internal(); v < dual.num_vertices(); v++) {
            absorbers.push_back(v);
        }
        double worst = 0;
        for (int t = 0; t < 1000; t++) {
            size_t k = 1 + t % 4;
            BitVec delta(code.num_edges());
            while (delta.popcount() < k) {
                delta.set(rng() % code.num_edges(), true);
            }
            auto gamma = code.flux_of_flips(random_set(code.num_qubits(), 0.05, rng));
            auto delta0 = dec.repair_gauge_syndrome(gamma ^ delta);
            auto best = enumerate_minimal_repair(graph, code.charge_of(delta), labels, absorbers);
            ASSERT_LE(best.popcount(), delta0.popcount());
            worst = std::max(worst, double(delta0.popcount()) / double(std::max<size_t>(1, best.popcount())));
            BitVec touched = delta;
            for (size_t e : delta0.ones()) {
                touched.set(e, true);
            }
            for (const auto &comp : flux_components(dual, touched)) {
                size_t in_delta = 0;
                size_t in_repair = 0;
                for (size_t e : comp) {
                    in_delta += delta[e];
                    in_repair += delta0[e];
                }
                ASSERT_LE(double(in_repair), REPAIR_RATIO_BOUND * double(in_delta)) << "d=" << d << " trial " << t;
            }
        }
        EXPECT_LE(worst, REPAIR_RATIO_BOUND) << "d=" << d;
    }
}

TEST(gauge_decode, syndrome_is_reproduced) {
    std::mt19937_64 rng(10);
    for (size_t d : {3, 5, 7}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        EXPECT_TRUE(dec.decode_syndrome(VertexSyndrome(code.num_vertices())).none());
        for (int t = 0; t < 300; t++) {
            auto sigma = code.vertex_syndrome_of_flips(random_set(code.num_qubits(), 0.01 + 0.1 * (t % 3), rng));
            ASSERT_EQ(code.vertex_syndrome_of_flips(dec.decode_syndrome(sigma)), sigma);
        }
        VertexSyndrome on_region(code.num_vertices());
        on_region.flip(code.num_vertices() - 1);
        EXPECT_THROW(dec.decode_syndrome(on_region), std::invalid_argument);
    }
}

TEST(gauge_decode, single_bulk_flip_weight_bound) {
    const auto &dec = decoder(5);
    const auto &code = dec.code();
    size_t bound = dec.decode_reduction().max_split() * dec.decode_reduction().max_lift();
    for (size_t q : bulk_qubits(code.dual())) {
        auto flips = single(code.num_qubits(), q);
        auto out = dec.decode_syndrome(code.vertex_syndrome_of_flips(flips));
        EXPECT_LE(out.popcount(), bound);
    }
}

TEST(gauge_decode, corrects_every_single_flip_at_distance_three) {
    const auto &dec = decoder(3);
    const auto &code = dec.code();
    size_t n = code.num_qubits();
    for (size_t q = 0; q < n; q++) {
        auto flips = single(n, q);
        auto out = dec.decode_syndrome(code.vertex_syndrome_of_flips(flips));
        auto cls = coset_check(PauliOperator(flips ^ out, BitVec(n)), code.code());
        EXPECT_TRUE(cls == CosetClass::STABILIZER || cls == CosetClass::GAUGE) << "qubit " << q;
        EXPECT_FALSE(dec.logical_flag(flips));
    }
}

TEST(gauge_decode, unmatchable_syndrome_raises_event) {
    auto slab = std::make_shared<GaugeColorCode>(build_frozen_slab(4, 1));
    GaugeDecoder dec(slab);
    VertexSyndrome sigma(slab->num_vertices());
    sigma.flip(0);
    EXPECT_THROW(dec.decode_syndrome(sigma), NonSyndromeEvent);
}

TEST(gauge_k_confinement, witness_within_bound) {
    std::mt19937_64 rng(11);
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        auto empty = dec.k_confinement_witness(FluxConfig(code.num_edges()));
        EXPECT_TRUE(empty.flips.none());
        EXPECT_EQ(empty.ratio, 0.0);
        double bound = double(code.max_stabilizer_weight());
        for (int t = 0; t < 1000; t++) {
            auto gamma = code.flux_of_flips(random_set(code.num_qubits(), 0.01 + 0.3 * (t % 6) / 6.0, rng));
            auto w = dec.k_confinement_witness(gamma);
            ASSERT_EQ(code.vertex_syndrome_of_flips(w.flips), code.branching_points(gamma));
            ASSERT_LE(w.ratio, bound);
        }
    }
}

TEST(gauge_k_confinement, components_are_neutral) {
    std::mt19937_64 rng(12);
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        for (int t = 0; t < 1000; t++) {
            auto gamma = code.flux_of_flips(random_set(code.num_qubits(), 0.02 + 0.2 * (t % 5) / 5.0, rng));
            for (const auto &comp : dec.neutrality(gamma)) {
                ASSERT_TRUE(comp.ok) << "charge " << int(comp.charge);
            }
        }
    }
    auto slab = std::make_shared<GaugeColorCode>(build_frozen_slab(4, 1));
    GaugeDecoder frozen(slab);
    for (int t = 0; t < 100; t++) {
        auto gamma = slab->flux_of_flips(random_set(slab->num_qubits(), 0.02, rng));
        for (const auto &comp : frozen.neutrality(gamma)) {
            ASSERT_EQ(comp.charge, 0);
            ASSERT_EQ(comp.absorbable, std::vector<uint8_t>{0});
        }
    }
}

TEST(gauge_simplified_repair, touches_only_defective_labels) {
    std::mt19937_64 rng(13);
    const auto &dec = decoder(5);
    const auto &code = dec.code();
    const auto &dual = code.dual();
    ColorSet rg = parse_color_set("rg");
    std::vector<size_t> rg_edges;
    for (size_t e = 0; e < dual.num_edges(); e++) {
        if (dual.edge(e).label == rg) {
            rg_edges.push_back(e);
        }
    }
    for (int t = 0; t < 100; t++) {
        BitVec gauge(code.num_qubits());
        for (size_t e : random_set(code.num_edges(), 0.1, rng).ones()) {
            for (uint32_t q : dual.edge_qubits(e)) {
                gauge.flip(q);
            }
        }
        BitVec measured = code.flux_of_flips(gauge);
        measured.flip(rg_edges[rng() % rg_edges.size()]);
        auto out = dec.simplified_flux_repair(measured);
        for (size_t e : out.ones()) {
            ASSERT_EQ(dual.edge(e).label, rg);
        }
        ASSERT_TRUE(code.is_valid_flux(measured ^ out));
    }
}

TEST(gauge_simplified_repair, agrees_without_branching) {
    std::mt19937_64 rng(14);
    for (size_t d : {3, 5}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        size_t n = code.num_qubits();
        size_t agree = 0;
        for (int t = 0; t < 1000; t++) {
            // Gauge operators leave no branching points.
            BitVec gauge(n);
            for (size_t e : random_set(code.num_edges(), 0.1, rng).ones()) {
                for (uint32_t q : code.dual().edge_qubits(e)) {
                    gauge.flip(q);
                }
            }
            auto gamma = code.flux_of_flips(gauge);
            ASSERT_TRUE(code.branching_points(gamma).none());
            BitVec delta(code.num_edges());
            delta.flip(rng() % code.num_edges());
            auto measured = gamma ^ delta;
            auto simple = dec.simplified_flux_repair(measured);
            auto full = dec.repair_gauge_syndrome(measured);
            ASSERT_EQ(code.err_of(measured ^ simple), code.err_of(measured ^ full));
            agree += simple == full;
        }
        EXPECT_EQ(agree, 1000u) << "d=" << d;
    }
}

TEST(gauge_simplified_repair, faster_than_full_repair) {
    std::mt19937_64 rng(15);
    const auto &dec = decoder(7);
    const auto &code = dec.code();
    std::vector<BitVec> inputs;
    for (int t = 0; t < 300; t++) {
        inputs.push_back(random_set(code.num_edges(), 0.02, rng));
    }
    auto time_it = [&](auto &&fn) {
        auto start = std::chrono::steady_clock::now();
        size_t total = 0;
        for (const auto &m : inputs) {
            total += fn(m).popcount();
        }
        EXPECT_GT(total, 0u);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    double simple = time_it([&](const BitVec &m) { return dec.simplified_flux_repair(m); });
    double full = time_it([&](const BitVec &m) { return dec.repair_gauge_syndrome(m); });
    EXPECT_LT(simple, full);
}

TEST(gauge_fix, clean_state_needs_nothing) {
    const auto &dec = decoder(5);
    auto fix = dec.gauge_fix(FluxConfig(dec.code().num_edges()));
    EXPECT_TRUE(fix.correction.none());
    EXPECT_TRUE(fix.gauge.none());
    BitVec state(dec.code().num_qubits());
    Rng rng(1);
    auto rec = dec.single_shot_round(state, 0, 0, rng);
    EXPECT_TRUE(state.none());
    EXPECT_EQ(rec.w + rec.w0 + rec.residual_weight, 0u);
}

TEST(gauge_fix, perfect_measurement_clears_flux) {
    std::mt19937_64 rng(16);
    for (size_t d : {3, 5, 7}) {
        const auto &dec = decoder(d);
        const auto &code = dec.code();
        for (int t = 0; t < 200; t++) {
            BitVec state = random_set(code.num_qubits(), 0.03, rng);
            auto fix = dec.gauge_fix(code.flux_of_flips(state));
            ASSERT_EQ(code.vertex_syndrome_of_flips(fix.correction), code.branching_points(code.flux_of_flips(state)));
            BitVec after = state ^ fix.correction ^ fix.gauge;
            ASSERT_TRUE(code.flux_of_flips(after).none());
        }
    }
}

TEST(gauge_fix, post_fix_flux_equals_effective_errors) {
    const auto &dec = decoder(5);
    const auto &code = dec.code();
    Rng rng(17);
    BitVec state(code.num_qubits());
    for (int t = 0; t < 300; t++) {
        flip_random_bits(state, 0.01, rng);
        FluxConfig delta = random_bits(code.num_edges(), 0.02, rng);
        FluxConfig measured = code.flux_of_flips(state) ^ delta;
        FluxConfig delta0 = dec.repair_gauge_syndrome(measured);
        auto fix = dec.gauge_fix(measured ^ delta0);
        state ^= fix.correction ^ fix.gauge;
        ASSERT_EQ(code.flux_of_flips(state), delta ^ delta0);
    }
}

TEST(gauge_fix, rounds_are_reproducible) {
    const auto &dec = decoder(5);
    auto run = [&]() {
        Rng rng(99);
        BitVec state(dec.code().num_qubits());
        std::vector<size_t> trace;
        for (int t = 0; t < 30; t++) {
            auto rec = dec.single_shot_round(state, 0.01, 0.01, rng);
            trace.push_back(rec.w * 1000000 + rec.w0 * 1000 + rec.residual_weight);
        }
        return trace;
    };
    EXPECT_EQ(run(), run());
}

TEST(gauge_code, self_dual_generators) {
    for (size_t d : {3, 5}) {
        const auto &code = tetra(d)->code();
        std::vector<BitVec> x_gauge, z_gauge, x_stab, z_stab;
        for (const auto &g : code.gauge_gens()) {
            (g.is_x_type() ? x_gauge : z_gauge).push_back(g.is_x_type() ? g.xs : g.zs);
        }
        for (const auto &s : code.stab_gens()) {
            (s.is_x_type() ? x_stab : z_stab).push_back(s.is_x_type() ? s.xs : s.zs);
        }
        EXPECT_EQ(x_gauge, z_gauge);
        EXPECT_EQ(x_stab, z_stab);
    }
}
