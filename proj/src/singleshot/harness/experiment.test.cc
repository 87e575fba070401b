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


#include "singleshot/harness/experiment.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace singleshot;

namespace {

ExperimentConfig small_config(CodeFamily family, size_t size) {
    ExperimentConfig c;
    c.family = family;
    c.sizes = {size};
    c.lambdas = {0.02};
    c.etas = {0.02};
    c.rounds = 5;
    c.trials = 6;
    c.seed = 77;
    return c;
}

std::string config_error_path(const std::string &text) {
    try {
        parse_experiment_config(text);
    } catch (const ConfigError &ex) {
        return ex.path;
    }
    return "";
}

const char *VALID =
    R"({"family": "ising-torus", "sizes": [8, 16], "lambdas": [0.01], "etas": [0.0, 0.5], "rounds": 30,
        "trials": 4, "seed": 9, "outputs": {"plots_dir": null}})";

}  // namespace

TEST(experiment_config, parses_and_round_trips) {
    auto c = parse_experiment_config(VALID);
    EXPECT_EQ(c.family, CodeFamily::ISING_TORUS);
    EXPECT_EQ(c.sizes, (std::vector<size_t>{8, 16}));
    EXPECT_EQ(c.etas, (std::vector<double>{0.0, 0.5}));
    EXPECT_EQ(c.rounds, 30u);
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.plots_dir, "");
    EXPECT_EQ(c.trials_csv, "trials.csv");
    auto again = parse_experiment_config(experiment_config_json(c));
    EXPECT_EQ(experiment_config_json(again), experiment_config_json(c));
}

TEST(experiment_config, errors_name_the_field) {
    EXPECT_EQ(config_error_path("[1, 2]"), "$");
    EXPECT_EQ(config_error_path("{nope"), "$");
    EXPECT_EQ(config_error_path(R"({"sizes": [4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1})"), "family");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "toric", "sizes": [4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1})"),
        "family");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "gauge-tetrahedral", "sizes": [3, 4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1})"),
        "sizes[1]");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": [0], "etas": [0.1, 1.5], "rounds": 1, "trials": 1})"),
        "etas[1]");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": ["x"], "etas": [0], "rounds": 1, "trials": 1})"),
        "lambdas[0]");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": [0], "etas": [0], "rounds": 0, "trials": 1})"),
        "rounds");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": -1})"),
        "trials");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1})"),
        "sizes");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1, "extra": 1})"),
        "extra");
    EXPECT_EQ(
        config_error_path(
            R"({"family": "ising-torus", "sizes": [4], "lambdas": [0], "etas": [0], "rounds": 1, "trials": 1,
                "outputs": {"csv": "a"}})"),
        "outputs.csv");
}

TEST(experiment, zero_trials_give_empty_outputs) {
    auto c = small_config(CodeFamily::ISING_TORUS, 6);
    c.trials = 0;
    auto rows = run_experiment(c, 2);
    EXPECT_TRUE(rows.empty());
    EXPECT_EQ(write_trials_csv(rows), std::string(TRIALS_CSV_HEADER) + "\n");
    auto doc = nlohmann::json::parse(summary_json(summarize(rows), 3));
    EXPECT_TRUE(doc["points"].empty());
}

TEST(experiment, output_is_identical_across_thread_counts) {
    for (auto [family, size] : {std::pair{CodeFamily::ISING_TORUS, size_t{8}}, {CodeFamily::GAUGE_TETRAHEDRAL, 3}}) {
        auto c = small_config(family, size);
        c.lambdas = {0.01, 0.05};
        std::string one = write_trials_csv(run_experiment(c, 1));
        EXPECT_EQ(write_trials_csv(run_experiment(c, 1)), one);
        EXPECT_EQ(write_trials_csv(run_experiment(c, 3)), one);
        EXPECT_EQ(write_trials_csv(run_experiment(c, 16)), one);
        c.seed++;
        EXPECT_NE(write_trials_csv(run_experiment(c, 1)), one);
    }
}

TEST(experiment, rows_follow_grid_order) {
    auto c = small_config(CodeFamily::ISING_TORUS, 6);
    c.sizes = {4, 6};
    c.etas = {0.0, 0.1};
    auto rows = run_experiment(c, 2);
    ASSERT_EQ(rows.size(), 2 * 2 * c.trials * c.rounds);
    EXPECT_EQ(rows.front().size, 4u);
    EXPECT_EQ(rows.front().eta, 0.0);
    EXPECT_EQ(rows[c.trials * c.rounds].eta, 0.1);
    EXPECT_EQ(rows.back().size, 6u);
    EXPECT_EQ(rows.back().trial, c.trials - 1);
    EXPECT_EQ(rows.back().round, c.rounds - 1);
    for (const auto &r : rows) {
        if (r.eta == 0 && r.lambda == 0) {
            EXPECT_EQ(r.w, 0u);
        }
        size_t total = 0;
        for (size_t s : r.cluster_sizes) {
            total += s;
        }
        EXPECT_EQ(total, r.residual_weight);
    }
}

TEST(experiment, csv_round_trip_and_errors) {
    auto rows = run_experiment(small_config(CodeFamily::GAUGE_TETRAHEDRAL, 3), 1);
    std::string text = write_trials_csv(rows);
    EXPECT_EQ(write_trials_csv(parse_trials_csv(text)), text);
    EXPECT_THROW(parse_trials_csv("trial,round\n"), std::invalid_argument);
    std::string bad = std::string(TRIALS_CSV_HEADER) + "\nising-torus,4,0.1,0.1,0,0,1,1,0,0,2,0,\n";
    try {
        parse_trials_csv(bad);
        FAIL();
    } catch (const std::invalid_argument &ex) {
        EXPECT_NE(std::string(ex.what()).find("Line 2"), std::string::npos);
    }
}

TEST(experiment, summary_counts_failures_and_discards) {
    std::vector<TrialRow> rows;
    auto add = [&](size_t trial, size_t round, bool logical, bool discard, std::vector<size_t> clusters) {
        TrialRow r;
        r.size = 4;
        r.lambda = 0.1;
        r.eta = 0;
        r.trial = trial;
        r.round = round;
        r.logical = logical;
        r.nonsyndrome = discard;
        for (size_t s : clusters) {
            r.residual_weight += s;
        }
        r.cluster_sizes = clusters;
        rows.push_back(r);
    };
    add(0, 0, false, false, {4});
    add(0, 1, true, false, {});
    add(0, 2, true, true, {6, 4});
    add(1, 0, true, false, {});
    add(1, 1, true, false, {});
    add(1, 2, false, false, {4});
    auto points = summarize(rows);
    ASSERT_EQ(points.size(), 1u);
    const auto &p = points[0];
    EXPECT_EQ(p.trials, 2u);
    EXPECT_EQ(p.rounds, 3u);
    EXPECT_EQ(p.failures, 4u);
    EXPECT_EQ(p.discards, 1u);
    EXPECT_NEAR(p.mean_residual_weight, 18.0 / 6.0, 1e-12);
    EXPECT_EQ(p.clusters.histogram.at(4), 3u);
    EXPECT_FALSE(p.sustainability.has_value());
    auto doc = nlohmann::json::parse(summary_json(points, 0));
    EXPECT_TRUE(doc["points"][0]["baseline"].get<bool>());
    EXPECT_FALSE(doc.contains("lattices"));
    rows.erase(rows.begin());
    EXPECT_THROW(summarize(rows), std::invalid_argument);
}

TEST(experiment, writes_all_outputs) {
    auto c = small_config(CodeFamily::ISING_TORUS, 6);
    c.rounds = 25;
    c.etas = {0.0, 0.05};
    auto dir = std::filesystem::temp_directory_path() / "singleshot_outputs_test";
    std::filesystem::remove_all(dir);
    write_outputs(c, run_experiment(c, 2), dir.string());
    std::ifstream csv(dir / "trials.csv");
    std::stringstream ss;
    ss << csv.rdbuf();
    EXPECT_EQ(parse_trials_csv(ss.str()).size(), 2 * c.trials * c.rounds);
    std::ifstream summary(dir / "summary.json");
    auto doc = nlohmann::json::parse(summary);
    ASSERT_EQ(doc["points"].size(), 2u);
    EXPECT_FALSE(doc["points"][1]["sustainability"].is_null());
    EXPECT_EQ(doc["lattices"][0]["connected_sets"][0], 1);
    EXPECT_TRUE(std::filesystem::exists(dir / "plots" / "failure_eta_0.05.svg"));
    EXPECT_TRUE(std::filesystem::exists(dir / "plots" / "clusters_size_6_lambda_0.02_eta_0.svg"));
    std::filesystem::remove_all(dir);
}

TEST(experiment, failure_rate_falls_with_size_at_low_noise) {
    ExperimentConfig c;
    c.family = CodeFamily::ISING_TORUS;
    c.sizes = {4, 8};
    c.lambdas = {0.005};
    c.etas = {0.005};
    c.rounds = 100;
    c.trials = 600;
    c.seed = 5;
    auto points = summarize(run_experiment(c, 0));
    ASSERT_EQ(points.size(), 2u);
    EXPECT_GT(points[0].failures, 0u);
    EXPECT_LT(points[1].failure_ci.hi, points[0].failure_ci.lo);
}

TEST(experiment, measurement_noise_controls_confinement) {
    ExperimentConfig c;
    c.family = CodeFamily::ISING_TORUS;
    c.sizes = {12};
    c.lambdas = {0.0};
    c.etas = {0.005, 0.5};
    c.rounds = 40;
    c.trials = 30;
    c.seed = 3;
    auto points = summarize(run_experiment(c, 0));
    ASSERT_EQ(points[0].fit.status, FitStatus::OK);
    ASSERT_EQ(points[1].fit.status, FitStatus::OK);
    EXPECT_LT(points[0].fit.ci.hi, 1.0);
    EXPECT_LT(points[0].fit.upsilon, points[1].fit.upsilon);
    EXPECT_FALSE(points[0].sustainability->drift);
}
