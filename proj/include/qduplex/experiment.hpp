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

#ifndef QDUPLEX_EXPERIMENT_HPP
#define QDUPLEX_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qduplex {

/// Resolved batch-run configuration. Defaults reproduce the headline
/// numbers; every report embeds the resolved copy for exact replay.
struct ExperimentConfig {
    std::string command;                // verify|sweep|pipeline|baseline|helper-demo
    double lambda = 10.0;               // noise strength for pipeline runs
    std::vector<double> lambda_grid;    // sweep grid; empty = default grid
    int trials = 10000;                 // helper-demo rounds
    int slots = 1000;                   // pipeline/baseline slots
    int samples = 100000;               // Monte Carlo samples per sweep point
    std::uint64_t seed = 42;            // master seed; substreams derive from it
    int quantize_bits = 0;              // 0 = ideal feedback link
    double clamp_range = 5.0;
    bool feedback = true;
    std::string output_path = "report"; // writes <output>.<format> and <output>_summary.json
    std::string format = "csv";         // csv|json
};

inline const std::vector<double>& default_lambda_grid() {
    static const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
    return grid;
}

/// Throws std::invalid_argument if any field is outside the ranges of the
/// operations the command will call.
void validate(const ExperimentConfig& cfg);

/// Merges a JSON config file into cfg; only keys present in the file are
/// applied, so command-line flags can override afterwards. Throws
/// std::runtime_error if the file cannot be read and std::invalid_argument
/// if it cannot be parsed.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

/// Full invariant suite behind `--command verify`. Prints one line per
/// check and returns the number of failures.
int run_verification(std::ostream& out, std::uint64_t seed);

/// Dispatches the configured command, writing the data report and the JSON
/// summary next to it. Returns a process exit status: 0 success,
/// 1 invariant failure, 2 usage error, 3 I/O error.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace qduplex

#endif
