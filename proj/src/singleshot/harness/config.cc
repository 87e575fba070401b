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


#include "singleshot/harness/config.h"

#include <set>

#include "json.hpp"

namespace singleshot {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> KNOWN_FIELDS{
    "family", "sizes", "lambdas", "etas", "rounds", "trials", "seed", "growth_max_size", "outputs"};
const std::set<std::string> KNOWN_OUTPUTS{"trials_csv", "summary_json", "plots_dir"};

uint64_t read_count(const Json &doc, const std::string &path) {
    if (!doc.is_number_integer() && !doc.is_number_unsigned()) {
        throw ConfigError(path, "expected a non-negative integer.");
    }
    if (doc.is_number_integer() && doc.get<int64_t>() < 0) {
        throw ConfigError(path, "expected a non-negative integer.");
    }
    return doc.get<uint64_t>();
}

double read_rate(const Json &doc, const std::string &path) {
    if (!doc.is_number()) {
        throw ConfigError(path, "expected a number.");
    }
    double p = doc.get<double>();
    if (!(p >= 0 && p <= 1)) {
        throw ConfigError(path, "rate must lie in [0,1].");
    }
    return p;
}

const Json &require(const Json &doc, const std::string &key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ConfigError(key, "required field is missing.");
    }
    return *it;
}

const Json &require_array(const Json &doc, const std::string &key) {
    const Json &a = require(doc, key);
    if (!a.is_array() || a.empty()) {
        throw ConfigError(key, "expected a non-empty array.");
    }
    return a;
}

std::string read_string(const Json &doc, const std::string &path) {
    if (!doc.is_string()) {
        throw ConfigError(path, "expected a string.");
    }
    return doc.get<std::string>();
}

}  // namespace

std::string code_family_name(CodeFamily f) {
    return f == CodeFamily::ISING_TORUS ? "ising-torus" : "gauge-tetrahedral";
}

CodeFamily parse_code_family(const std::string &name) {
    if (name == "ising-torus") {
        return CodeFamily::ISING_TORUS;
    }
    if (name == "gauge-tetrahedral") {
        return CodeFamily::GAUGE_TETRAHEDRAL;
    }
    throw std::invalid_argument("Unknown code family '" + name + "'; expected 'ising-torus' or 'gauge-tetrahedral'.");
}

void check_family_size(CodeFamily f, size_t size) {
    if (f == CodeFamily::ISING_TORUS && size < 2) {
        throw std::invalid_argument("Ising torus size must be at least 2.");
    }
    if (f == CodeFamily::GAUGE_TETRAHEDRAL && (size < 3 || size % 2 == 0)) {
        throw std::invalid_argument("Tetrahedral distance must be odd and at least 3.");
    }
}

ExperimentConfig parse_experiment_config(const std::string &json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error &ex) {
        throw ConfigError("$", std::string("malformed JSON: ") + ex.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("$", "expected a JSON object.");
    }
    for (const auto &[key, value] : doc.items()) {
        if (!KNOWN_FIELDS.count(key)) {
            throw ConfigError(key, "unknown field.");
        }
    }
    ExperimentConfig c;
    try {
        c.family = parse_code_family(read_string(require(doc, "family"), "family"));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &ex) {
        throw ConfigError("family", ex.what());
    }
    const Json &sizes = require_array(doc, "sizes");
    for (size_t i = 0; i < sizes.size(); i++) {
        std::string path = "sizes[" + std::to_string(i) + "]";
        size_t s = read_count(sizes[i], path);
        try {
            check_family_size(c.family, s);
        } catch (const std::invalid_argument &ex) {
            throw ConfigError(path, ex.what());
        }
        c.sizes.push_back(s);
    }
    const Json &lambdas = require_array(doc, "lambdas");
    for (size_t i = 0; i < lambdas.size(); i++) {
        c.lambdas.push_back(read_rate(lambdas[i], "lambdas[" + std::to_string(i) + "]"));
    }
    const Json &etas = require_array(doc, "etas");
    for (size_t i = 0; i < etas.size(); i++) {
        c.etas.push_back(read_rate(etas[i], "etas[" + std::to_string(i) + "]"));
    }
    c.rounds = read_count(require(doc, "rounds"), "rounds");
    if (c.rounds == 0) {
        throw ConfigError("rounds", "must be at least 1.");
    }
    c.trials = read_count(require(doc, "trials"), "trials");
    if (doc.contains("seed")) {
        c.seed = read_count(doc["seed"], "seed");
    }
    if (doc.contains("growth_max_size")) {
        c.growth_max_size = read_count(doc["growth_max_size"], "growth_max_size");
        if (c.growth_max_size > 8) {
            throw ConfigError("growth_max_size", "must be at most 8.");
        }
    }
    if (doc.contains("outputs")) {
        const Json &out = doc["outputs"];
        if (!out.is_object()) {
            throw ConfigError("outputs", "expected an object.");
        }
        for (const auto &[key, value] : out.items()) {
            if (!KNOWN_OUTPUTS.count(key)) {
                throw ConfigError("outputs." + key, "unknown field.");
            }
        }
        if (out.contains("trials_csv")) {
            c.trials_csv = read_string(out["trials_csv"], "outputs.trials_csv");
        }
        if (out.contains("summary_json")) {
            c.summary_json = read_string(out["summary_json"], "outputs.summary_json");
        }
        if (out.contains("plots_dir")) {
            c.plots_dir = out["plots_dir"].is_null() ? "" : read_string(out["plots_dir"], "outputs.plots_dir");
        }
        if (c.trials_csv.empty()) {
            throw ConfigError("outputs.trials_csv", "must not be empty.");
        }
        if (c.summary_json.empty()) {
            throw ConfigError("outputs.summary_json", "must not be empty.");
        }
    }
    return c;
}

std::string experiment_config_json(const ExperimentConfig &c) {
    Json doc;
    doc["family"] = code_family_name(c.family);
    doc["sizes"] = c.sizes;
    doc["lambdas"] = c.lambdas;
    doc["etas"] = c.etas;
    doc["rounds"] = c.rounds;
    doc["trials"] = c.trials;
    doc["seed"] = c.seed;
    doc["growth_max_size"] = c.growth_max_size;
    doc["outputs"] = {{"trials_csv", c.trials_csv}, {"summary_json", c.summary_json}, {"plots_dir", c.plots_dir}};
    return doc.dump(2) + "\n";
}

}  // namespace singleshot
