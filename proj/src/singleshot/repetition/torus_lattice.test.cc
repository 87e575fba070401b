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

#include "singleshot/repetition/torus_lattice.h"

#include <random>

#include "gtest/gtest.h"
#include "singleshot/oracle/minimal_repair.h"
#include "singleshot/repetition/single_shot.h"

using namespace singleshot;

namespace {

BitVec random_set(size_t n, double p, std::mt19937_64 &rng) {
    BitVec out(n);
    std::bernoulli_distribution coin(p);
    for (size_t k = 0; k < n; k++) {
        if (coin(rng)) {
            out.flip(k);
        }
    }
    return out;
}

FaceSet all_faces(const TorusLattice &lat) {
    FaceSet f(lat.num_faces());
    for (size_t k = 0; k < lat.num_faces(); k++) {
        f.flip(k);
    }
    return f;
}

}  // namespace

TEST(torus_lattice, incidence_invariants) {
    for (size_t L : {2, 3, 5, 8}) {
        TorusLattice lat(L);
        std::vector<int> face_degree(lat.num_faces(), 0);
        std::vector<int> vertex_degree(lat.num_vertices(), 0);
        for (size_t e = 0; e < lat.num_edges(); e++) {
            auto [a, b] = lat.edge_faces(e);
            EXPECT_NE(a, b);
            face_degree[a]++;
            face_degree[b]++;
            auto [u, v] = lat.edge_vertices(e);
            vertex_degree[u]++;
            vertex_degree[v]++;
        }
        for (int d : face_degree) {
            EXPECT_EQ(d, 4);
        }
        for (int d : vertex_degree) {
            EXPECT_EQ(d, 4);
        }
        EXPECT_EQ((long)lat.num_vertices() - (long)lat.num_edges() + (long)lat.num_faces(), 0);
        for (size_t f = 0; f < lat.num_faces(); f++) {
            for (size_t e : lat.face_edges(f)) {
                auto [a, b] = lat.edge_faces(e);
                EXPECT_TRUE(a == f || b == f);
            }
        }
        for (size_t v = 0; v < lat.num_vertices(); v++) {
            for (size_t e : lat.vertex_edges(v)) {
                auto [a, b] = lat.edge_vertices(e);
                EXPECT_TRUE(a == v || b == v);
            }
        }
    }
    EXPECT_THROW(TorusLattice(1), std::invalid_argument);
}

TEST(torus_lattice, boundary_properties) {
    TorusLattice lat(6);
    FaceSet one(lat.num_faces());
    one.flip(lat.index(2, 3));
    auto b = boundary(lat, one);
    EXPECT_EQ(b.popcount(), 4u);
    EXPECT_TRUE(boundary(lat, all_faces(lat)).none());
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 100; rep++) {
        auto f = random_set(lat.num_faces(), 0.3, rng);
        auto g = random_set(lat.num_faces(), 0.3, rng);
        EXPECT_EQ(boundary(lat, f ^ g), boundary(lat, f) ^ boundary(lat, g));
        EXPECT_EQ(boundary(lat, f), boundary(lat, f ^ all_faces(lat)));
        EXPECT_TRUE(is_closed(lat, boundary(lat, f)));
    }
}

TEST(torus_lattice, single_face_flip_lights_its_four_checks) {
    auto code = ising_torus_code(3);
    EXPECT_EQ(code.n(), 9u);
    TorusLattice lat(3);
    auto s = syndrome_of(PauliOperator::single(9, 4, 'X'), code);
    EXPECT_EQ(s.popcount(), 4u);
    auto expected = lat.face_edges(4);
    for (size_t e : expected) {
        EXPECT_TRUE(s[e]);
    }
    EXPECT_EQ(code_distance_bruteforce(code, 9, ErrorBasis::X_ONLY), 9u);
}

TEST(torus_lattice, canonical_paths_are_shortest) {
    TorusLattice lat(5);
    for (size_t u = 0; u < lat.num_vertices(); u++) {
        for (size_t v = 0; v < lat.num_vertices(); v++) {
            auto path = lat.canonical_path(u, v);
            EXPECT_EQ(path.size(), lat.distance(u, v));
            EdgeSet set(lat.num_edges());
            for (size_t e : path) {
                set.flip(e);
            }
            auto odd = odd_vertices(lat, set);
            if (u != v) {
                EXPECT_EQ(odd, (std::vector<size_t>{std::min(u, v), std::max(u, v)}));
            } else {
                EXPECT_TRUE(odd.empty());
            }
        }
    }
}

TEST(close_pseudo_syndrome, basics) {
    TorusLattice lat(6);
    EXPECT_TRUE(close_pseudo_syndrome(lat, EdgeSet(lat.num_edges())).none());
    EdgeSet single(lat.num_edges());
    single.flip(17);
    EXPECT_EQ(close_pseudo_syndrome(lat, single), single);
    FaceSet f(lat.num_faces());
    f.flip(3);
    f.flip(10);
    EXPECT_TRUE(close_pseudo_syndrome(lat, boundary(lat, f)).none());
}

TEST(close_pseudo_syndrome, minimal_against_exhaustive_oracle) {
    std::mt19937_64 rng(2);
    for (size_t L = 2; L <= 6; L++) {
        TorusLattice lat(L);
        for (int rep = 0; rep < 200; rep++) {
            auto p = random_set(lat.num_edges(), 0.03 + 0.05 * (rep % 4), rng);
            auto w0 = close_pseudo_syndrome(lat, p);
            EXPECT_TRUE(is_closed(lat, p ^ w0));
            EXPECT_LE(w0.popcount(), p.popcount());
            auto exact = enumerate_minimal_repair(lat.vertex_graph(), odd_vertices(lat, p));
            EXPECT_EQ(w0.popcount(), exact.popcount());
            // Depends only on the defects: adding a closed set leaves it unchanged.
            auto loop = boundary(lat, random_set(lat.num_faces(), 0.2, rng));
            EXPECT_EQ(close_pseudo_syndrome(lat, p ^ loop), w0);
        }
    }
}

TEST(decode, examples) {
    TorusLattice lat(8);
    EXPECT_TRUE(decode(lat, EdgeSet(lat.num_edges())).none());
    FaceSet block(lat.num_faces());
    for (size_t r = 2; r < 4; r++) {
        for (size_t c = 5; c < 7; c++) {
            block.flip(lat.index(r, c));
        }
    }
    EXPECT_EQ(decode(lat, boundary(lat, block)), block);
    // The complement of a small block decodes to the block itself.
    EXPECT_EQ(decode(lat, boundary(lat, block ^ all_faces(lat))), block);
    EdgeSet loop(lat.num_edges());
    for (size_t c = 0; c < 8; c++) {
        loop.flip(lat.h_edge(3, c));
    }
    EXPECT_THROW(decode(lat, loop), NonSyndromeEvent);
    EdgeSet open(lat.num_edges());
    open.flip(0);
    EXPECT_THROW(decode(lat, open), std::invalid_argument);
}

TEST(decode, half_split_tie_takes_region_with_face_zero) {
    TorusLattice lat(4);
    // A 3x3 block without one corner: 8 of the 16 faces, contractible.
    FaceSet block(lat.num_faces());
    for (size_t r = 1; r < 4; r++) {
        for (size_t c = 1; c < 4; c++) {
            if (r != 3 || c != 3) {
                block.flip(lat.index(r, c));
            }
        }
    }
    auto flips = decode(lat, boundary(lat, block));
    EXPECT_TRUE(flips[0]);
    EXPECT_EQ(flips.popcount(), 8u);
}

TEST(decode, per_component_smaller_side) {
    std::mt19937_64 rng(3);
    TorusLattice lat(10);
    for (int rep = 0; rep < 200; rep++) {
        FaceSet f = random_set(lat.num_faces(), 0.05, rng);
        auto syndrome = boundary(lat, f);
        auto flips = decode(lat, syndrome);
        EXPECT_EQ(boundary(lat, flips), syndrome);
        EXPECT_LE(flips.popcount(), f.popcount());
    }
}

TEST(logical_class, examples_and_bruteforce_cosets) {
    TorusLattice lat(4);
    EXPECT_FALSE(logical_class(lat, FaceSet(16)).logical);
    EXPECT_TRUE(logical_class(lat, all_faces(lat)).logical);
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 20; rep++) {
        FaceSet f = random_set(16, (double)(rng() % 100) / 100.0, rng);
        auto target = boundary(lat, f);
        std::vector<FaceSet> coset;
        for (uint64_t mask = 0; mask < (1u << 16); mask++) {
            FaceSet g(16);
            for (size_t q = 0; q < 16; q++) {
                if ((mask >> q) & 1) {
                    g.flip(q);
                }
            }
            if (boundary(lat, g) == target) {
                coset.push_back(g);
            }
        }
        ASSERT_EQ(coset.size(), 2u);
        const FaceSet &other = coset[0] == f ? coset[1] : coset[0];
        auto cls = logical_class(lat, f);
        if (!cls.tie) {
            EXPECT_EQ(cls.logical, f.popcount() > other.popcount());
        }
    }
}

TEST(single_shot_round, noiseless_and_perfect_measurement) {
    TorusLattice lat(8);
    Rng rng(5);
    FaceSet state(lat.num_faces());
    auto rec = single_shot_round(lat, state, 0, 0, rng);
    EXPECT_TRUE(state.none());
    EXPECT_EQ(rec.w, 0u);
    EXPECT_EQ(rec.w0, 0u);
    EXPECT_EQ(rec.residual_weight, 0u);
    for (int k = 0; k < 50; k++) {
        single_shot_round(lat, state, 0.05, 0, rng);
        EXPECT_TRUE(boundary(lat, state).none());
    }
    EXPECT_THROW(single_shot_round(lat, state, 1.5, 0, rng), std::invalid_argument);
}

TEST(single_shot_round, residual_is_measurement_error_plus_repair) {
    TorusLattice lat(12);
    Rng rng(6);
    FaceSet state(lat.num_faces());
    for (int k = 0; k < 50; k++) {
        auto rec = single_shot_round(lat, state, 0, 0.02, rng);
        EXPECT_LE(rec.w0, rec.w);
        EXPECT_TRUE(rec.residual_weight <= rec.w + rec.w0 || rec.nonsyndrome);
        size_t total = 0;
        for (size_t s : rec.cluster_sizes) {
            total += s;
        }
        EXPECT_EQ(total, rec.residual_weight);
    }
}

TEST(logical_readout, majority_examples) {
    TorusLattice lat(16);
    Rng rng(7);
    FaceSet clean(lat.num_faces());
    EXPECT_FALSE(logical_readout(lat, clean, 0, rng));
    FaceSet almost(lat.num_faces());
    for (size_t f = 0; f < lat.num_faces() / 2 - 1; f++) {
        almost.flip(f);
    }
    EXPECT_FALSE(logical_readout(lat, almost, 0, rng));
    size_t errors = 0;
    for (int k = 0; k < 100000; k++) {
        errors += logical_readout(lat, clean, 0.1, rng);
    }
    EXPECT_LT((double)errors / 1e5, 1e-3);
}
