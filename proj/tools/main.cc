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


#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "singleshot/colex/builders.h"
#include "singleshot/gauge/pipeline.h"
#include "singleshot/harness/experiment.h"
#include "singleshot/harness/oracle_suite.h"
#include "singleshot/pauli/code_families.h"
#include "singleshot/pauli/code_io.h"
#include "singleshot/repetition/torus_lattice.h"

using namespace singleshot;

namespace {

using Json = nlohmann::ordered_json;

/// Failure of a check the user asked for, as opposed to bad input.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("Cannot read '" + path + "'.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("Cannot write '" + path + "'.");
    }
    out << text;
}

SubsystemCode build_named_code(const std::string &family, size_t size, Colex *colex_out) {
    if (family == "repetition") {
        return repetition_code(size, false);
    }
    if (family == "repetition-ring") {
        return repetition_code(size, true);
    }
    if (family == "ising-torus") {
        return ising_torus_code(size);
    }
    Colex colex = build_colex_family(family, size);
    if (colex_out != nullptr) {
        *colex_out = colex;
    }
    return derive_code(colex);
}

BitVec indices_to_bits(const Json &list, size_t n, const std::string &field) {
    if (!list.is_array()) {
        throw std::invalid_argument("Field '" + field + "' must be an array of indices.");
    }
    BitVec bits(n);
    for (const auto &v : list) {
        if (!v.is_number_unsigned() || v.get<size_t>() >= n) {
            throw std::invalid_argument("Field '" + field + "' holds an index outside [0, " + std::to_string(n) + ").");
        }
        bits.flip(v.get<size_t>());
    }
    return bits;
}

Json bits_to_indices(const BitVec &bits) {
    Json out = Json::array();
    for (size_t k : bits.ones()) {
        out.push_back(k);
    }
    return out;
}

std::string decode_request(const std::string &text) {
    Json in = Json::parse(text);
    if (!in.is_object() || !in.contains("family") || !in.contains("size")) {
        throw std::invalid_argument("Decode input needs 'family' and 'size'.");
    }
    CodeFamily family = parse_code_family(in["family"].get<std::string>());
    size_t size = in["size"].get<size_t>();
    check_family_size(family, size);
    Json out;
    out["family"] = code_family_name(family);
    out["size"] = size;
    out["nonsyndrome"] = false;
    try {
        if (family == CodeFamily::ISING_TORUS) {
            TorusLattice lattice(size);
            EdgeSet measured = indices_to_bits(in.value("measured_syndrome", Json::array()), lattice.num_edges(), "measured_syndrome");
            EdgeSet w0 = close_pseudo_syndrome(lattice, measured);
            out["repair"] = bits_to_indices(w0);
            out["correction"] = bits_to_indices(decode(lattice, measured ^ w0));
        } else {
            GaugeDecoder dec(std::make_shared<const GaugeColorCode>(build_tetrahedral(size)));
            const auto &code = dec.code();
            FluxConfig measured = indices_to_bits(in.value("measured_flux", Json::array()), code.num_edges(), "measured_flux");
            FluxConfig delta0 = dec.repair_gauge_syndrome(measured);
            GaugeFix fix = dec.gauge_fix(measured ^ delta0);
            out["repair"] = bits_to_indices(delta0);
            out["correction"] = bits_to_indices(fix.correction);
            out["gauge"] = bits_to_indices(fix.gauge);
        }
    } catch (const NonSyndromeEvent &ex) {
        out["nonsyndrome"] = true;
        out["message"] = ex.what();
    }
    return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-shot error correction simulator."};
    app.require_subcommand(1);
    app.fallthrough();
    uint64_t seed = 0;
    size_t threads = 0;
    std::string out_dir = ".";
    auto *seed_opt = app.add_option("--seed", seed, "Base seed; overrides the config.");
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency).");
    app.add_option("--out-dir", out_dir, "Directory for output files.");

    std::string family;
    size_t size = 0;
    std::string out_file;
    std::string colex_out;
    auto *build = app.add_subcommand("build-code", "Write a code's generators in the text code format.");
    build->add_option("--family", family,
                      "repetition, repetition-ring, ising-torus, tetrahedral, torus, frozen-slab or glued-tetrahedral")
        ->required();
    build->add_option("--size", size, "Length, lattice size or distance.")->required();
    build->add_option("--out", out_file, "Output file (default: stdout).");
    build->add_option("--colex-out", colex_out, "Also write the colex as JSON (colex families only).");

    std::string colex_file;
    auto *validate_cmd = app.add_subcommand("validate-colex", "Check a colex from a JSON file or a family.");
    validate_cmd->add_option("--file", colex_file, "Colex JSON file.");
    validate_cmd->add_option("--family", family, "tetrahedral, torus, frozen-slab or glued-tetrahedral");
    validate_cmd->add_option("--size", size, "Family size.");

    std::string input_file;
    auto *decode_cmd = app.add_subcommand("decode", "Repair and decode one measured syndrome from a JSON file.");
    decode_cmd->add_option("--input", input_file, "JSON request file.")->required()->check(CLI::ExistingFile);
    decode_cmd->add_option("--out", out_file, "Output file (default: stdout).");

    std::string config_file;
    auto *simulate = app.add_subcommand("simulate", "Run an experiment grid from a JSON config.");
    simulate->add_option("--config", config_file, "Experiment config file.")->required()->check(CLI::ExistingFile);

    std::string csv_file;
    size_t growth = 4;
    auto *fit = app.add_subcommand("fit", "Recompute the summary from a trials.csv file.");
    fit->add_option("--csv", csv_file, "trials.csv to analyze.")->required()->check(CLI::ExistingFile);
    fit->add_option("--out", out_file, "Output file (default: stdout).");
    fit->add_option("--growth-max-size", growth, "Connected-set size limit for the lattice growth estimate.");

    size_t cases = 300;
    auto *oracle = app.add_subcommand("oracle-check", "Cross-validate decoders against exact oracles.");
    oracle->add_option("--cases", cases, "Random cases per check.");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            Colex colex;
            SubsystemCode code = build_named_code(family, size, colex_out.empty() ? nullptr : &colex);
            code.validate();
            emit(write_code_text(code), out_file);
            if (!colex_out.empty()) {
                if (colex.family.empty()) {
                    throw std::invalid_argument("--colex-out needs a colex family.");
                }
                emit(colex_to_json(colex), colex_out);
            }
            std::cerr << "n=" << code.n() << " k=" << code.num_logical_qubits()
                      << " stabilizers=" << code.stab_gens().size() << " gauge=" << code.gauge_gens().size() << "\n";
        } else if (validate_cmd->parsed()) {
            if (colex_file.empty() == family.empty()) {
                throw std::invalid_argument("Give exactly one of --file or --family.");
            }
            Colex colex = colex_file.empty() ? build_colex_family(family, size) : colex_from_json(read_file(colex_file));
            auto report = validate(colex);
            if (!report.ok) {
                throw CheckFailed("invalid colex: " + report.message);
            }
            std::cout << "ok: " << colex.num_vertices() << " vertices, " << colex.cells.size() << " cells, "
                      << colex.regions.size() << " regions\n";
        } else if (decode_cmd->parsed()) {
            emit(decode_request(read_file(input_file)), out_file);
        } else if (simulate->parsed()) {
            ExperimentConfig config = parse_experiment_config(read_file(config_file));
            if (*seed_opt) {
                config.seed = seed;
            }
            auto rows = run_experiment(config, threads);
            write_outputs(config, rows, out_dir);
            std::cerr << rows.size() << " rows written to " << (std::filesystem::path(out_dir) / config.trials_csv).string()
                      << "\n";
        } else if (fit->parsed()) {
            auto points = summarize(parse_trials_csv(read_file(csv_file)));
            emit(summary_json(points, growth), out_file);
        } else if (oracle->parsed()) {
            bool all = true;
            for (const auto &c : run_oracle_suite(seed, cases)) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
                all &= c.passed;
            }
            if (!all) {
                throw CheckFailed("some oracle checks failed.");
            }
        }
    } catch (const CheckFailed &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
