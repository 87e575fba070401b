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


#ifndef _SINGLESHOT_HARNESS_CONFIG_H
#define _SINGLESHOT_HARNESS_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace singleshot {

/// Invalid experiment configuration; `path` names the offending field, e.g. "etas[2]".
struct ConfigError : std::invalid_argument {
    ConfigError(std::string path, const std::string &message)
        : std::invalid_argument(path + ": " + message), path(std::move(path)) {
    }
    std::string path;
};

enum class CodeFamily { ISING_TORUS, GAUGE_TETRAHEDRAL };

std::string code_family_name(CodeFamily f);
/// Throws std::invalid_argument for unknown names.
CodeFamily parse_code_family(const std::string &name);
/// Throws std::invalid_argument when the size is not valid for the family.
void check_family_size(CodeFamily f, size_t size);

struct ExperimentConfig {
    CodeFamily family = CodeFamily::ISING_TORUS;
    std::vector<size_t> sizes;
    std::vector<double> lambdas;
    std::vector<double> etas;
    size_t rounds = 1;
    size_t trials = 0;
    uint64_t seed = 0;
    /// Largest connected-set size counted for the lattice growth estimate; 0 disables it.
    size_t growth_max_size = 4;
    std::string trials_csv = "trials.csv";
    std::string summary_json = "summary.json";
    /// Directory for SVG charts, relative to the output directory; empty disables them.
    std::string plots_dir = "plots";
};

/// Parses and validates a JSON document. Unknown fields are rejected.
ExperimentConfig parse_experiment_config(const std::string &json_text);
std::string experiment_config_json(const ExperimentConfig &config);

}  // namespace singleshot

#endif
