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

// Batch experiment runner. Reports land next to --output as
// <output>.<format> plus <output>_summary.json; the summary embeds the
// resolved configuration and seed so any run can be replayed exactly.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qduplex/experiment.hpp"

namespace {

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad lambda grid entry '" + item + "'");
        grid.push_back(v);
    }
    if (grid.empty()) throw std::invalid_argument("lambda grid is empty");
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-subchannel feedback experiment runner"};

    std::string command;
    std::string config_path;
    std::string grid_text;
    bool no_feedback = false;
    qduplex::ExperimentConfig cfg;

    app.add_option("--command", command, "verify | sweep | pipeline | baseline | helper-demo")
        ->required();
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    app.add_option("--lambda", cfg.lambda, "noise strength for pipeline runs");
    app.add_option("--lambda-grid", grid_text, "comma-separated sweep grid, e.g. 0,0.5,1,2,5");
    app.add_option("--trials", cfg.trials, "helper-demo rounds");
    app.add_option("--slots", cfg.slots, "pipeline/baseline slots");
    app.add_option("--samples", cfg.samples, "Monte Carlo samples per sweep point");
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--quantize-bits", cfg.quantize_bits, "feedback quantization bits (0 = exact)");
    app.add_option("--clamp-range", cfg.clamp_range, "feedback clamp range");
    app.add_flag("--no-feedback", no_feedback, "disable the feedback link");
    app.add_option("--output", cfg.output_path, "report base path");
    app.add_option("--format", cfg.format, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // --help exits 0; anything else is a usage error.
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            qduplex::ExperimentConfig from_file;
            qduplex::apply_config_file(from_file, config_path);
            // Start from the file, then re-apply whatever flags were given.
            std::swap(cfg, from_file);
            for (const CLI::Option* opt : app.get_options()) {
                if (opt->count() == 0) continue;
                const std::string name = opt->get_name();
                if (name == "--lambda") cfg.lambda = from_file.lambda;
                else if (name == "--trials") cfg.trials = from_file.trials;
                else if (name == "--slots") cfg.slots = from_file.slots;
                else if (name == "--samples") cfg.samples = from_file.samples;
                else if (name == "--seed") cfg.seed = from_file.seed;
                else if (name == "--quantize-bits") cfg.quantize_bits = from_file.quantize_bits;
                else if (name == "--clamp-range") cfg.clamp_range = from_file.clamp_range;
                else if (name == "--output") cfg.output_path = from_file.output_path;
                else if (name == "--format") cfg.format = from_file.format;
            }
        }
        cfg.command = command;
        if (!grid_text.empty()) cfg.lambda_grid = parse_grid(grid_text);
        if (no_feedback) cfg.feedback = false;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    return qduplex::run_experiment(cfg);
}
