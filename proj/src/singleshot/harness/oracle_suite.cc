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


#include "singleshot/harness/oracle_suite.h"

#include <algorithm>
#include <functional>

#include "singleshot/colex/builders.h"
#include "singleshot/oracle/coset.h"
#include "singleshot/oracle/minimal_repair.h"
#include "singleshot/repetition/torus_lattice.h"
#include "singleshot/util/rng.h"

namespace singleshot {

namespace {

void finish(OracleCheck &c, double ratio_bound = 1.0) {
    c.passed = c.mismatches == 0 && c.worst_ratio <= ratio_bound;
    c.detail = std::to_string(c.cases) + " cases, " + std::to_string(c.mismatches) + " mismatches, worst ratio " +
               std::to_string(c.worst_ratio);
}

std::string dual_name(const GaugeDecoder &dec) {
    return "n=" + std::to_string(dec.code().num_qubits());
}

/// Charge-labelled graph of the dual lattice with every region as an absorber.
struct ChargeProblem {
    Graph graph{0};
    std::vector<uint8_t> labels;
    std::vector<size_t> absorbers;
};

ChargeProblem charge_problem(const DualLattice &dual) {
    ChargeProblem p;
    p.graph = Graph(dual.num_vertices());
    for (const auto &e : dual.edges()) {
        p.graph.add_edge(e.u, e.v);
        p.labels.push_back(label_charge(e.label));
    }
    for (size_t v = dual.num_internal(); v < dual.num_vertices(); v++) {
        p.absorbers.push_back(v);
    }
    return p;
}

double ratio(size_t got, size_t best) {
    if (best == 0) {
        return got == 0 ? 1.0 : double(got);
    }
    return double(got) / double(best);
}

}  // namespace

OracleCheck check_ising_closure(size_t L, size_t cases, uint64_t seed) {
    OracleCheck c;
    c.name = "ising_closure L=" + std::to_string(L);
    TorusLattice lattice(L);
    Rng rng(seed);
    for (size_t t = 0; t < cases; t++) {
        double eta = 0.02 + 0.08 * double(t % 4);
        FaceSet faces = random_bits(lattice.num_faces(), 0.1, rng);
        EdgeSet w = random_bits(lattice.num_edges(), eta, rng);
        EdgeSet p = boundary(lattice, faces) ^ w;
        EdgeSet w0 = close_pseudo_syndrome(lattice, p);
        auto best = enumerate_minimal_repair(lattice.vertex_graph(), odd_vertices(lattice, p));
        c.cases++;
        bool ok = w0.popcount() <= w.popcount() && w0.popcount() == best.popcount() && is_closed(lattice, p ^ w0);
        c.mismatches += !ok;
        c.worst_ratio = std::max(c.worst_ratio, ratio(w0.popcount(), best.popcount()));
    }
    finish(c);
    return c;
}

OracleCheck check_label_t_joins(const GaugeDecoder &dec, size_t cases, uint64_t seed) {
    OracleCheck c;
    c.name = "label_t_joins " + dual_name(dec);
    const auto &code = dec.code();
    const auto &dual = code.dual();
    std::vector<ColorSet> classes;
    for (const auto &e : dual.edges()) {
        if (std::find(classes.begin(), classes.end(), e.label) == classes.end()) {
            classes.push_back(e.label);
        }
    }
    std::sort(classes.begin(), classes.end());
    std::vector<size_t> absorbers;
    for (size_t v = dual.num_internal(); v < dual.num_vertices(); v++) {
        absorbers.push_back(v);
    }
    Rng rng(seed);
    for (size_t t = 0; t < cases; t++) {
        FluxConfig measured = random_bits(code.num_edges(), 0.01 + 0.01 * double(t % 3), rng);
        FluxConfig out = dec.simplified_flux_repair(measured);
        for (ColorSet label : classes) {
            Graph g(dual.num_vertices());
            std::vector<size_t> degree(dual.num_vertices(), 0);
            size_t got = 0;
            for (size_t e = 0; e < dual.num_edges(); e++) {
                if (dual.edge(e).label != label) {
                    continue;
                }
                g.add_edge(dual.edge(e).u, dual.edge(e).v);
                if (measured[e]) {
                    degree[dual.edge(e).u]++;
                    degree[dual.edge(e).v]++;
                }
                got += out[e];
            }
            std::vector<size_t> defects;
            for (size_t v = 0; v < dual.num_internal(); v++) {
                if (degree[v] % 2 == 1) {
                    defects.push_back(v);
                }
            }
            auto best = enumerate_minimal_repair(g, defects, absorbers);
            c.cases++;
            c.mismatches += got != best.popcount();
            c.worst_ratio = std::max(c.worst_ratio, ratio(got, best.popcount()));
        }
    }
    finish(c);
    return c;
}

OracleCheck check_single_outcome_repairs(const GaugeDecoder &dec) {
    OracleCheck c;
    c.name = "single_outcome_repairs " + dual_name(dec);
    const auto &code = dec.code();
    auto problem = charge_problem(code.dual());
    for (size_t e = 0; e < code.num_edges(); e++) {
        FluxConfig delta(code.num_edges());
        delta.flip(e);
        auto delta0 = dec.repair_gauge_syndrome(delta);
        auto best = enumerate_minimal_repair(problem.graph, code.charge_of(delta), problem.labels, problem.absorbers);
        c.cases++;
        c.mismatches += delta0.popcount() != best.popcount() || !code.is_valid_flux(delta ^ delta0);
        c.worst_ratio = std::max(c.worst_ratio, ratio(delta0.popcount(), best.popcount()));
    }
    finish(c);
    return c;
}

OracleCheck check_repair_ratio(const GaugeDecoder &dec, size_t cases, double ratio_bound, uint64_t seed) {
    OracleCheck c;
    c.name = "repair_ratio " + dual_name(dec);
    const auto &code = dec.code();
    const auto &dual = code.dual();
    auto problem = charge_problem(dual);
    Rng rng(seed);
    size_t optimal = 0;
    for (size_t t = 0; t < cases; t++) {
        size_t k = 1 + t % 4;
        FluxConfig delta(code.num_edges());
        while (delta.popcount() < k) {
            delta.set(rng.below(code.num_edges()), true);
        }
        FluxConfig gamma = code.flux_of_flips(random_bits(code.num_qubits(), 0.05, rng));
        auto delta0 = dec.repair_gauge_syndrome(gamma ^ delta);
        auto best = enumerate_minimal_repair(problem.graph, code.charge_of(delta), problem.labels, problem.absorbers);
        c.cases++;
        optimal += delta0.popcount() == best.popcount();
        c.mismatches += !code.is_valid_flux(gamma ^ delta ^ delta0) || best.popcount() > delta0.popcount();
        c.worst_ratio = std::max(c.worst_ratio, ratio(delta0.popcount(), best.popcount()));
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
            c.worst_ratio = std::max(c.worst_ratio, ratio(in_repair, in_delta));
        }
    }
    finish(c, ratio_bound);
    c.detail += ", optimal in " + std::to_string(optimal) + "/" + std::to_string(c.cases);
    return c;
}

OracleCheck check_decode_ratio(
    const GaugeDecoder &dec, size_t max_weight, double ratio_bound, size_t cases, uint64_t seed) {
    OracleCheck c;
    c.name = "decode_ratio " + dual_name(dec);
    const auto &code = dec.code();
    size_t n = code.num_qubits();
    Rng rng(seed);
    for (size_t t = 0; t < cases; t++) {
        size_t k = 1 + t % max_weight;
        BitVec flips(n);
        while (flips.popcount() < k) {
            flips.set(rng.below(n), true);
        }
        auto sigma = code.vertex_syndrome_of_flips(flips);
        auto out = dec.decode_syndrome(sigma);
        // The minimum weight is at most k; search weights below k exhaustively.
        size_t best = k;
        std::vector<size_t> chosen;
        std::function<bool(size_t, size_t, BitVec &)> search = [&](size_t start, size_t left,
                                                                   BitVec &trial) -> bool {
            if (left == 0) {
                return code.vertex_syndrome_of_flips(trial) == sigma;
            }
            for (size_t q = start; q < n; q++) {
                trial.flip(q);
                bool hit = search(q + 1, left - 1, trial);
                trial.flip(q);
                if (hit) {
                    return true;
                }
            }
            return false;
        };
        for (size_t w = 0; w < k; w++) {
            BitVec trial(n);
            if (search(0, w, trial)) {
                best = w;
                break;
            }
        }
        c.cases++;
        c.mismatches += code.vertex_syndrome_of_flips(out) != sigma;
        c.worst_ratio = std::max(c.worst_ratio, ratio(out.popcount(), best));
    }
    finish(c, ratio_bound);
    return c;
}

OracleCheck check_single_flip_cosets(const GaugeDecoder &dec) {
    OracleCheck c;
    c.name = "single_flip_cosets " + dual_name(dec);
    const auto &code = dec.code();
    size_t n = code.num_qubits();
    for (size_t q = 0; q < n; q++) {
        BitVec flips(n);
        flips.flip(q);
        auto out = dec.decode_syndrome(code.vertex_syndrome_of_flips(flips));
        auto cls = coset_check(PauliOperator(flips ^ out, BitVec(n)), code.code());
        c.cases++;
        c.mismatches += cls != CosetClass::STABILIZER && cls != CosetClass::GAUGE;
    }
    c.worst_ratio = c.mismatches == 0 ? 1.0 : 0.0;
    finish(c);
    return c;
}

std::vector<OracleCheck> run_oracle_suite(uint64_t seed, size_t cases) {
    std::vector<OracleCheck> out;
    for (size_t L = 3; L <= 6; L++) {
        out.push_back(check_ising_closure(L, cases, trial_seed(seed, L)));
    }
    for (size_t d : {3, 5}) {
        GaugeDecoder dec(std::make_shared<const GaugeColorCode>(build_tetrahedral(d)));
        out.push_back(check_label_t_joins(dec, cases, trial_seed(seed, 100 + d)));
        out.push_back(check_single_outcome_repairs(dec));
        out.push_back(check_repair_ratio(dec, cases, REPAIR_RATIO_BOUND, trial_seed(seed, 200 + d)));
        if (d == 3) {
            out.push_back(check_single_flip_cosets(dec));
        } else {
            out.push_back(check_decode_ratio(dec, 2, DECODE_RATIO_BOUND, cases, trial_seed(seed, 300 + d)));
        }
    }
    return out;
}

}  // namespace singleshot
