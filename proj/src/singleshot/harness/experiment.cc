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

#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "singleshot/colex/builders.h"
#include "singleshot/gauge/pipeline.h"
#include "singleshot/harness/svg_chart.h"
#include "singleshot/repetition/single_shot.h"
#include "singleshot/util/rng.h"

namespace singleshot {

const char *const TRIALS_CSV_HEADER =
    "family,size,lambda,eta,trial,round,w,w0,residual_weight,largest_cluster,nonsyndrome_flag,logical_flag,"
    "cluster_sizes";

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Immutable per-size simulation state shared by all trials.
struct Lattice {
    std::shared_ptr<const TorusLattice> torus;
    std::shared_ptr<const GaugeDecoder> gauge;
};

Lattice build_lattice(CodeFamily family, size_t size) {
    Lattice out;
    if (family == CodeFamily::ISING_TORUS) {
        out.torus = std::make_shared<const TorusLattice>(size);
    } else {
        auto code = std::make_shared<const GaugeColorCode>(build_tetrahedral(size));
        out.gauge = std::make_shared<const GaugeDecoder>(code);
    }
    return out;
}

template <typename Record>
TrialRow row_of(const Record &rec) {
    TrialRow row;
    row.w = rec.w;
    row.w0 = rec.w0;
    row.residual_weight = rec.residual_weight;
    row.largest_cluster = rec.largest_cluster;
    row.nonsyndrome = rec.nonsyndrome;
    row.logical = rec.logical;
    row.cluster_sizes = rec.cluster_sizes;
    return row;
}

std::vector<TrialRow> run_trial(
    const ExperimentConfig &config, const Lattice &lattice, size_t size, double lambda, double eta, size_t trial,
    uint64_t seed) {
    Rng rng(seed);
    std::vector<TrialRow> rows;
    BitVec state(lattice.torus ? lattice.torus->num_faces() : lattice.gauge->code().num_qubits());
    for (size_t r = 0; r < config.rounds; r++) {
        TrialRow row = lattice.torus ? row_of(single_shot_round(*lattice.torus, state, lambda, eta, rng))
                                     : row_of(lattice.gauge->single_shot_round(state, lambda, eta, rng));
        row.family = config.family;
        row.size = size;
        row.lambda = lambda;
        row.eta = eta;
        row.trial = trial;
        row.round = r;
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
T parse_number(const std::string &field, const std::string &what) {
    T v{};
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw std::invalid_argument("malformed " + what + " '" + field + "'.");
    }
    return v;
}

bool parse_flag(const std::string &field, const std::string &what) {
    if (field != "0" && field != "1") {
        throw std::invalid_argument("malformed " + what + " '" + field + "'.");
    }
    return field == "1";
}

Json interval_json(const Interval &ci) {
    return Json::array({ci.lo, ci.hi});
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("Cannot write '" + path.string() + "'.");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("Failed writing '" + path.string() + "'.");
    }
}

}  // namespace

std::vector<TrialRow> run_experiment(const ExperimentConfig &config, size_t threads) {
    for (size_t s : config.sizes) {
        check_family_size(config.family, s);
    }
    if (config.trials == 0) {
        return {};
    }
    struct Task {
        size_t size_index;
        double lambda;
        double eta;
        size_t trial;
        uint64_t index;
    };
    std::vector<Task> tasks;
    uint64_t point = 0;
    for (size_t si = 0; si < config.sizes.size(); si++) {
        for (double lambda : config.lambdas) {
            for (double eta : config.etas) {
                for (size_t t = 0; t < config.trials; t++) {
                    tasks.push_back(Task{si, lambda, eta, t, point * config.trials + t});
                }
                point++;
            }
        }
    }
    std::vector<Lattice> lattices;
    for (size_t s : config.sizes) {
        lattices.push_back(build_lattice(config.family, s));
    }

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, tasks.size());
    std::vector<std::vector<TrialRow>> results(tasks.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed) {
            size_t k = next++;
            if (k >= tasks.size()) {
                return;
            }
            const Task &t = tasks[k];
            try {
                results[k] = run_trial(
                    config, lattices[t.size_index], config.sizes[t.size_index], t.lambda, t.eta, t.trial,
                    trial_seed(config.seed, t.index));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t i = 1; i < threads; i++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<TrialRow> rows;
    for (auto &r : results) {
        for (auto &row : r) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string write_trials_csv(const std::vector<TrialRow> &rows) {
    std::string out = TRIALS_CSV_HEADER;
    out += '\n';
    for (const auto &r : rows) {
        out += code_family_name(r.family);
        out += ',' + std::to_string(r.size);
        out += ',' + format_double(r.lambda);
        out += ',' + format_double(r.eta);
        out += ',' + std::to_string(r.trial);
        out += ',' + std::to_string(r.round);
        out += ',' + std::to_string(r.w);
        out += ',' + std::to_string(r.w0);
        out += ',' + std::to_string(r.residual_weight);
        out += ',' + std::to_string(r.largest_cluster);
        out += r.nonsyndrome ? ",1" : ",0";
        out += r.logical ? ",1," : ",0,";
        for (size_t i = 0; i < r.cluster_sizes.size(); i++) {
            if (i > 0) {
                out += ';';
            }
            out += std::to_string(r.cluster_sizes[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<TrialRow> parse_trials_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != TRIALS_CSV_HEADER) {
        throw std::invalid_argument("Line 1: expected header '" + std::string(TRIALS_CSV_HEADER) + "'.");
    }
    std::vector<TrialRow> rows;
    size_t line_number = 1;
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            f.push_back(item);
        }
        if (!line.empty() && line.back() == ',') {
            f.emplace_back();
        }
        try {
            if (f.size() != 13) {
                throw std::invalid_argument("expected 13 fields, found " + std::to_string(f.size()) + ".");
            }
            TrialRow r;
            r.family = parse_code_family(f[0]);
            r.size = parse_number<size_t>(f[1], "size");
            r.lambda = parse_number<double>(f[2], "lambda");
            r.eta = parse_number<double>(f[3], "eta");
            r.trial = parse_number<size_t>(f[4], "trial");
            r.round = parse_number<size_t>(f[5], "round");
            r.w = parse_number<size_t>(f[6], "w");
            r.w0 = parse_number<size_t>(f[7], "w0");
            r.residual_weight = parse_number<size_t>(f[8], "residual_weight");
            r.largest_cluster = parse_number<size_t>(f[9], "largest_cluster");
            r.nonsyndrome = parse_flag(f[10], "nonsyndrome_flag");
            r.logical = parse_flag(f[11], "logical_flag");
            if (!f[12].empty()) {
                std::stringstream cs(f[12]);
                while (std::getline(cs, item, ';')) {
                    r.cluster_sizes.push_back(parse_number<size_t>(item, "cluster size"));
                }
            }
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument("Line " + std::to_string(line_number) + ": " + ex.what());
        }
    }
    return rows;
}

std::vector<std::vector<uint32_t>> syndrome_adjacency(CodeFamily family, size_t size) {
    check_family_size(family, size);
    std::vector<std::vector<uint32_t>> adj;
    if (family == CodeFamily::ISING_TORUS) {
        TorusLattice lattice(size);
        adj.resize(lattice.num_edges());
        for (size_t e = 0; e < lattice.num_edges(); e++) {
            auto [u, v] = lattice.edge_vertices(e);
            for (size_t x : {u, v}) {
                for (size_t f : lattice.vertex_edges(x)) {
                    if (f != e) {
                        adj[e].push_back(uint32_t(f));
                    }
                }
            }
        }
    } else {
        GaugeColorCode code(build_tetrahedral(size));
        const DualLattice &dual = code.dual();
        adj.resize(dual.num_edges());
        for (size_t e = 0; e < dual.num_edges(); e++) {
            const auto &de = dual.edge(e);
            for (uint32_t x : {de.u, de.v}) {
                if (dual.external(x)) {
                    continue;
                }
                for (uint32_t f : dual.vertex_edges(x)) {
                    if (f != e) {
                        adj[e].push_back(f);
                    }
                }
            }
        }
    }
    for (auto &list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::vector<PointSummary> summarize(const std::vector<TrialRow> &rows) {
    using Key = std::tuple<int, size_t, double, double>;
    std::map<Key, size_t> index;
    std::vector<PointSummary> points;
    // Per point: previous logical class of each trial, residual sums per round and trial ids.
    std::vector<std::map<size_t, bool>> previous;
    std::vector<std::vector<std::pair<double, size_t>>> per_round;
    std::vector<KahanSum> residual_sums;
    for (const auto &r : rows) {
        Key key{int(r.family), r.size, r.lambda, r.eta};
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, points.size()).first;
            PointSummary p;
            p.family = r.family;
            p.size = r.size;
            p.lambda = r.lambda;
            p.eta = r.eta;
            points.push_back(std::move(p));
            previous.emplace_back();
            per_round.emplace_back();
            residual_sums.emplace_back();
        }
        size_t k = it->second;
        PointSummary &p = points[k];
        bool before = false;
        if (r.round > 0) {
            auto prev = previous[k].find(r.trial);
            if (prev == previous[k].end()) {
                throw std::invalid_argument(
                    "Trial " + std::to_string(r.trial) + " starts at round " + std::to_string(r.round) + ".");
            }
            before = prev->second;
        }
        previous[k][r.trial] = r.logical;
        p.rounds = std::max(p.rounds, r.round + 1);
        p.failures += (r.logical != before) || r.nonsyndrome;
        p.discards += r.nonsyndrome;
        p.clusters.add_round(r.cluster_sizes);
        residual_sums[k].add(double(r.residual_weight));
        if (per_round[k].size() <= r.round) {
            per_round[k].resize(r.round + 1, {0.0, 0});
        }
        per_round[k][r.round].first += double(r.residual_weight);
        per_round[k][r.round].second++;
    }
    for (size_t k = 0; k < points.size(); k++) {
        PointSummary &p = points[k];
        p.trials = previous[k].size();
        size_t observed = p.clusters.largest_per_round.size();
        if (observed != p.trials * p.rounds) {
            throw std::invalid_argument("Point has trials of unequal length.");
        }
        p.failure_ci = wilson_interval(p.failures, observed);
        p.discard_ci = wilson_interval(p.discards, observed);
        p.mean_residual_weight = observed == 0 ? 0 : residual_sums[k].value() / double(observed);
        p.fit = fit_confinement(p.clusters);
        if (p.rounds >= 20) {
            std::vector<double> series;
            for (auto [sum, count] : per_round[k]) {
                series.push_back(sum / double(count));
            }
            p.sustainability = sustainability_report(series);
        }
    }
    return points;
}

std::string summary_json(const std::vector<PointSummary> &points, size_t growth_max_size) {
    Json doc;
    doc["points"] = Json::array();
    std::map<std::pair<int, size_t>, bool> lattices;
    for (const auto &p : points) {
        lattices[{int(p.family), p.size}] = true;
        Json j;
        j["family"] = code_family_name(p.family);
        j["size"] = p.size;
        j["lambda"] = p.lambda;
        j["eta"] = p.eta;
        j["trials"] = p.trials;
        j["rounds"] = p.rounds;
        j["baseline"] = p.eta == 0;
        j["failure"] = {{"count", p.failures}, {"rate", p.failure_rate()}, {"ci", interval_json(p.failure_ci)}};
        j["discard"] = {{"count", p.discards}, {"rate", p.discard_rate()}, {"ci", interval_json(p.discard_ci)}};
        j["mean_residual_weight"] = p.mean_residual_weight;
        Json hist = Json::object();
        for (const auto &[s, c] : p.clusters.histogram) {
            hist[std::to_string(s)] = c;
        }
        Json fit = {{"status", fit_status_name(p.fit.status)}, {"bins_used", p.fit.bins_used}};
        if (p.fit.status == FitStatus::OK) {
            fit["upsilon"] = p.fit.upsilon;
            fit["ci"] = interval_json(p.fit.ci);
            fit["unconfined"] = p.fit.unconfined;
        }
        j["clusters"] = {
            {"count", p.clusters.num_clusters()},
            {"total_size", p.clusters.total_size()},
            {"histogram", hist},
            {"largest_cluster",
             {{"p50", p.clusters.largest_quantile(0.5)},
              {"p90", p.clusters.largest_quantile(0.9)},
              {"p99", p.clusters.largest_quantile(0.99)}}},
            {"fit", fit}};
        if (p.sustainability.has_value()) {
            j["sustainability"] = {
                {"rounds", p.sustainability->rounds},
                {"mann_kendall_z", p.sustainability->trend.z},
                {"p_value", p.sustainability->trend.p_value},
                {"drift", p.sustainability->drift}};
        } else {
            j["sustainability"] = nullptr;
        }
        doc["points"].push_back(std::move(j));
    }
    if (growth_max_size > 0) {
        doc["lattices"] = Json::array();
        for (const auto &[key, unused] : lattices) {
            auto family = CodeFamily(key.first);
            auto adj = syndrome_adjacency(family, key.second);
            uint32_t root = 0;
            for (uint32_t e = 0; e < adj.size(); e++) {
                if (adj[e].size() > adj[root].size()) {
                    root = e;
                }
            }
            auto growth = connectivity_growth(adj, root, growth_max_size);
            doc["lattices"].push_back(
                {{"family", code_family_name(family)},
                 {"size", key.second},
                 {"root_edge", root},
                 {"connected_sets", growth.counts},
                 {"growth", growth.growth}});
        }
    }
    return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> summary_charts(const std::vector<PointSummary> &points) {
    std::vector<std::pair<std::string, std::string>> out;
    std::map<double, LineChart> by_eta;
    for (const auto &p : points) {
        LineChart &chart = by_eta[p.eta];
        chart.title = code_family_name(p.family) + ": failure per round at eta = " + format_double(p.eta);
        chart.x_label = "lambda";
        chart.y_label = "failure rate per round";
        std::string name = "size " + std::to_string(p.size);
        auto it = std::find_if(
            chart.series.begin(), chart.series.end(), [&](const ChartSeries &s) { return s.name == name; });
        if (it == chart.series.end()) {
            chart.series.push_back(ChartSeries{name, {}});
            it = chart.series.end() - 1;
        }
        it->points.emplace_back(p.lambda, p.failure_rate());
    }
    for (const auto &[eta, chart] : by_eta) {
        out.emplace_back("failure_eta_" + format_double(eta) + ".svg", render_svg(chart));
    }
    for (const auto &p : points) {
        LineChart chart;
        chart.title = code_family_name(p.family) + " size " + std::to_string(p.size) + ", lambda = " +
                      format_double(p.lambda) + ", eta = " + format_double(p.eta);
        chart.x_label = "cluster size";
        chart.y_label = "count";
        chart.log_y = true;
        ChartSeries s{"clusters", {}};
        for (const auto &[size, count] : p.clusters.histogram) {
            s.points.emplace_back(double(size), double(count));
        }
        chart.series.push_back(std::move(s));
        out.emplace_back(
            "clusters_size_" + std::to_string(p.size) + "_lambda_" + format_double(p.lambda) + "_eta_" +
                format_double(p.eta) + ".svg",
            render_svg(chart));
    }
    return out;
}

void write_outputs(const ExperimentConfig &config, const std::vector<TrialRow> &rows, const std::string &out_dir) {
    std::filesystem::path root(out_dir);
    std::filesystem::create_directories(root);
    auto points = summarize(rows);
    write_file(root / config.trials_csv, write_trials_csv(rows));
    write_file(root / config.summary_json, summary_json(points, config.growth_max_size));
    if (!config.plots_dir.empty() && !points.empty()) {
        std::filesystem::path plots = root / config.plots_dir;
        std::filesystem::create_directories(plots);
        for (const auto &[name, svg] : summary_charts(points)) {
            write_file(plots / name, svg);
        }
    }
}

}  // namespace singleshot
