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

#include "singleshot/util/stats.h"

#include <cmath>

#include "gtest/gtest.h"
#include "singleshot/util/rng.h"

using namespace singleshot;

TEST(stats, kahan_sum_is_compensated) {
    KahanSum s;
    s.add(1.0);
    for (int k = 0; k < 1000000; k++) {
        s.add(1e-16);
    }
    EXPECT_NEAR(s.value(), 1.0 + 1e-10, 1e-15);
}

TEST(stats, wilson_interval_basics) {
    auto i = wilson_interval(0, 100);
    EXPECT_EQ(i.lo, 0);
    EXPECT_GT(i.hi, 0);
    auto j = wilson_interval(50, 100);
    EXPECT_TRUE(j.contains(0.5));
    EXPECT_NEAR(j.hi - 0.5, 0.5 - j.lo, 1e-12);
    EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(stats, wilson_coverage_is_nominal) {
    Rng rng(99);
    int covered = 0;
    const int reps = 1000;
    const double p = 0.2;
    for (int r = 0; r < reps; r++) {
        size_t hits = 0;
        for (int k = 0; k < 200; k++) {
            hits += rng.bernoulli(p);
        }
        covered += wilson_interval(hits, 200).contains(p);
    }
    EXPECT_GE(covered, 930);
    EXPECT_LE(covered, 970);
}

TEST(stats, mann_kendall_detects_trends) {
    std::vector<double> flat(50, 3.0);
    EXPECT_FALSE(mann_kendall(flat).drift);
    std::vector<double> rising;
    for (int k = 0; k < 50; k++) {
        rising.push_back(k * 0.5);
    }
    auto r = mann_kendall(rising);
    EXPECT_TRUE(r.drift);
    EXPECT_GT(r.z, 0);
    Rng rng(3);
    std::vector<double> noise;
    for (int k = 0; k < 60; k++) {
        noise.push_back(rng.uniform());
    }
    EXPECT_GT(mann_kendall(noise).p_value, 0.001);
    EXPECT_THROW(mann_kendall({1, 2}), std::invalid_argument);
}

TEST(stats, weighted_least_squares_recovers_line) {
    std::vector<double> x{1, 2, 3, 4}, y, w{1, 2, 3, 4};
    for (double v : x) {
        y.push_back(2 * v - 1);
    }
    auto fit = weighted_least_squares(x, y, w);
    ASSERT_TRUE(fit.has_value());
    EXPECT_NEAR(fit->slope, 2, 1e-12);
    EXPECT_NEAR(fit->intercept, -1, 1e-12);
    EXPECT_FALSE(weighted_least_squares({1, 1}, {0, 1}, {1, 1}).has_value());
}

TEST(rng, deterministic_and_bit_sampling) {
    Rng a(5), b(5);
    for (int k = 0; k < 10; k++) {
        EXPECT_EQ(a.next(), b.next());
    }
    EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
    EXPECT_EQ(trial_seed(1, 7), trial_seed(1, 7));
    Rng c(1);
    for (double p : {0.0, 0.002, 0.05, 0.3, 1.0}) {
        size_t total = 0;
        for (int k = 0; k < 200; k++) {
            total += random_bits(1000, p, c).popcount();
        }
        double mean = (double)total / 200000.0;
        EXPECT_NEAR(mean, p, 5 * std::sqrt(p * (1 - p) / 200000.0) + 1e-12);
    }
    for (int k = 0; k < 1000; k++) {
        EXPECT_LT(c.below(7), 7u);
    }
}

TEST(stats, binomial_upper_tail_matches_direct_sum) {
    EXPECT_NEAR(binomial_upper_tail(2, 3, 0.5), 0.5, 1e-12);
    EXPECT_NEAR(binomial_upper_tail(3, 3, 0.1), 0.001, 1e-12);
    EXPECT_EQ(binomial_upper_tail(0, 10, 0.3), 1);
    EXPECT_NEAR(binomial_upper_tail(1, 100, 0.01), 1 - std::pow(0.99, 100), 1e-12);
    EXPECT_LT(binomial_upper_tail(200, 1000, 0.05), 1e-30);
}
