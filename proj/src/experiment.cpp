// Copyright 2026 The qduplex Authors
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

#include "qduplex/experiment.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "qduplex/capacity.hpp"
#include "qduplex/protocol.hpp"
#include "qduplex/report.hpp"
#include "qduplex/simulation.hpp"

namespace qduplex {

namespace {

using nlohmann::json;

const char* kCommands[] = {"verify", "sweep", "pipeline", "baseline", "helper-demo"};

bool known_command(const std::string& c) {
    for (const char* k : kCommands)
        if (c == k) return true;
    return false;
}

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["lambda"] = cfg.lambda;
    j["lambda_grid"] = cfg.lambda_grid.empty() ? default_lambda_grid() : cfg.lambda_grid;
    j["trials"] = cfg.trials;
    j["slots"] = cfg.slots;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["quantize_bits"] = cfg.quantize_bits;
    j["clamp_range"] = cfg.clamp_range;
    j["feedback"] = cfg.feedback;
    j["output_path"] = cfg.output_path;
    j["format"] = cfg.format;
    return j;
}

void write_summary(const ExperimentConfig& cfg, const json& results) {
    json j;
    j["command"] = cfg.command;
    j["config"] = config_to_json(cfg);
    j["results"] = results;

    const std::string path = cfg.output_path + "_summary.json";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << "\n";
    f.flush();
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::string data_path(const ExperimentConfig& cfg) {
    return cfg.output_path + "." + cfg.format;
}

int run_sweep(const ExperimentConfig& cfg) {
    const std::vector<double>& grid = cfg.lambda_grid.empty() ? default_lambda_grid() : cfg.lambda_grid;
    std::vector<SweepRecord> records = lambda_sweep(grid, cfg.samples, cfg.seed);

    std::vector<ReportRow> rows;
    rows.reserve(records.size());
    for (const SweepRecord& r : records) {
        ReportRow row;
        row.add("lambda", r.lambda)
            .add("chi_bits", r.chi_bits)
            .add("mc_samples", r.mc_samples)
            .add("seed", std::to_string(r.seed));
        rows.push_back(std::move(row));
    }
    emit_report(rows, data_path(cfg), cfg.format);

    double chi_min = records.front().chi_bits, chi_max = chi_min;
    for (const SweepRecord& r : records) {
        chi_min = std::min(chi_min, r.chi_bits);
        chi_max = std::max(chi_max, r.chi_bits);
    }
    json results;
    results["grid_size"] = records.size();
    results["chi_min_bits"] = chi_min;
    results["chi_max_bits"] = chi_max;
    results["chi_units"] = "bits_per_transmitted_qubit";
    write_summary(cfg, results);
    return 0;
}

int run_pipeline_cmd(const ExperimentConfig& cfg) {
    NoisyChannelConfig channel{cfg.lambda};
    FeedbackLinkConfig fb{cfg.quantize_bits, cfg.clamp_range};
    RandomStream messages(RandomStream::derive_seed(cfg.seed, 1));
    RandomStream physics(RandomStream::derive_seed(cfg.seed, 2));
    TrialLog log = run_pipeline(cfg.slots, channel, fb, cfg.feedback, messages, physics, cfg.seed);

    std::vector<ReportRow> rows;
    rows.reserve(log.deliveries.size());
    for (const SlotDelivery& d : log.deliveries) {
        ReportRow row;
        row.add("slot", d.slot_index)
            .add("message", d.message)
            .add("decoded", d.decoded)
            .add("correct", d.correct)
            .add("lambda", cfg.lambda)
            .add("feedback", cfg.feedback);
        rows.push_back(std::move(row));
    }
    emit_report(rows, data_path(cfg), cfg.format);

    std::int64_t message_errors = 0;
    for (const SlotDelivery& d : log.deliveries)
        if (!d.correct) ++message_errors;
    const std::int64_t qubits = qubits_transmitted(log);

    json results;
    results["slots"] = log.slots;
    results["completed_pairs"] = log.completed_pairs;
    results["bits_sent"] = log.bits_sent;
    results["bits_decoded_correctly"] = log.bits_decoded_correctly;
    results["message_errors"] = message_errors;
    results["throughput_bits_per_slot"] = log.throughput_bits_per_slot();
    results["qubits_transmitted"] = qubits;
    results["throughput_bits_per_qubit"] =
        qubits > 0 ? static_cast<double>(log.bits_decoded_correctly) / static_cast<double>(qubits)
                   : 0.0;
    write_summary(cfg, results);
    return 0;
}

int run_baseline_cmd(const ExperimentConfig& cfg) {
    RandomStream rng(RandomStream::derive_seed(cfg.seed, 1));
    BaselineLog log = run_classical_baseline(cfg.feedback, cfg.slots, 0.5, rng);

    std::vector<ReportRow> rows;
    rows.reserve(log.rows.size());
    for (const BaselineSlotRow& r : log.rows) {
        ReportRow row;
        row.add("slot", r.slot)
            .add("noisy_bit_in", r.noisy_bit_in)
            .add("noisy_bit_out", r.noisy_bit_out)
            .add("quiet_payload_kind", r.quiet_payload_kind)
            .add("novel_bits_delivered", r.novel_bits_delivered);
        rows.push_back(std::move(row));
    }
    emit_report(rows, data_path(cfg), cfg.format);

    // Channel uses per slot: both binary subchannels with feedback, the
    // quiet one alone without.
    const std::int64_t uses = static_cast<std::int64_t>(log.slots) * (cfg.feedback ? 2 : 1);
    json results;
    results["slots"] = log.slots;
    results["novel_bits"] = log.novel_bits;
    results["throughput_bits_per_slot"] = log.throughput_bits_per_slot();
    results["channel_uses"] = uses;
    results["throughput_bits_per_channel_use"] =
        static_cast<double>(log.novel_bits) / static_cast<double>(uses);
    write_summary(cfg, results);
    return 0;
}

int run_helper_demo(const ExperimentConfig& cfg) {
    FlipChannelConfig flip;  // p_flip = 1/2, one helper per slot
    RandomStream info_bits(RandomStream::derive_seed(cfg.seed, 1));
    RandomStream physics(RandomStream::derive_seed(cfg.seed, 2));

    std::vector<ReportRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.trials));
    std::int64_t inferred_ok = 0, blind_ok = 0;
    for (int round = 1; round <= cfg.trials; ++round) {
        HelperFeedbackResult r = helper_feedback_round(flip, info_bits.bit(), physics);
        if (r.inferred_flip == r.true_flip) ++inferred_ok;
        if (r.receiver_blind_guess_correct) ++blind_ok;
        ReportRow row;
        row.add("round", round)
            .add("true_flip", r.true_flip)
            .add("inferred_flip", r.inferred_flip)
            .add("receiver_blind_correct", r.receiver_blind_guess_correct);
        rows.push_back(std::move(row));
    }
    emit_report(rows, data_path(cfg), cfg.format);

    json results;
    results["rounds"] = cfg.trials;
    results["inference_accuracy"] = static_cast<double>(inferred_ok) / cfg.trials;
    results["blind_guess_accuracy"] = static_cast<double>(blind_ok) / cfg.trials;
    write_summary(cfg, results);
    return 0;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
    if (!known_command(cfg.command)) {
        throw std::invalid_argument("unknown command '" + cfg.command +
                                    "' (expected verify, sweep, pipeline, baseline or helper-demo)");
    }
    if (!(cfg.lambda >= 0.0) || !std::isfinite(cfg.lambda)) {
        throw std::invalid_argument("lambda must be finite and >= 0");
    }
    for (double l : cfg.lambda_grid) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw std::invalid_argument("lambda grid entries must be finite and >= 0");
        }
    }
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.slots < 2) throw std::invalid_argument("slots must be >= 2");
    if (cfg.samples < 1000) throw std::invalid_argument("samples must be >= 1000");
    if (cfg.quantize_bits < 0) throw std::invalid_argument("quantize-bits must be >= 0");
    if (!(cfg.clamp_range > 0.0) || !std::isfinite(cfg.clamp_range)) {
        throw std::invalid_argument("clamp-range must be positive and finite");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    if (cfg.command != "verify" && cfg.output_path.empty()) {
        throw std::invalid_argument("output path must be nonempty");
    }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config file " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (j.contains("command")) cfg.command = j.at("command").get<std::string>();
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
    if (j.contains("lambda_grid")) cfg.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("slots")) cfg.slots = j.at("slots").get<int>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("quantize_bits")) cfg.quantize_bits = j.at("quantize_bits").get<int>();
    if (j.contains("clamp_range")) cfg.clamp_range = j.at("clamp_range").get<double>();
    if (j.contains("feedback")) cfg.feedback = j.at("feedback").get<bool>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
}

int run_experiment(const ExperimentConfig& cfg) {
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.command == "verify") {
            int failures = run_verification(std::cout, cfg.seed);
            if (failures != 0) {
                std::cout << failures << " check(s) failed\n";
                return 1;
            }
            std::cout << "all checks passed\n";
            return 0;
        }
        if (cfg.command == "sweep") return run_sweep(cfg);
        if (cfg.command == "pipeline") return run_pipeline_cmd(cfg);
        if (cfg.command == "baseline") return run_baseline_cmd(cfg);
        return run_helper_demo(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qduplex
