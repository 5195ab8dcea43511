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

#include "qduplex/capacity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qduplex {

namespace {

double binary_entropy(double x) {
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

// Entropy of a one-qubit state given its Bloch length.
double entropy_from_bloch_length(double r) {
    r = std::min(r, 1.0);
    return binary_entropy(0.5 * (1.0 + r));
}

double vec_norm(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

void validate(const Ensemble& e) {
    if (e.entries.empty()) {
        throw std::invalid_argument("Ensemble: empty");
    }
    int dim = e.entries.front().second.matrix().dim();
    double total_p = 0.0;
    for (const auto& [p, rho] : e.entries) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("Ensemble: probabilities must be nonnegative");
        }
        if (rho.matrix().dim() != dim) {
            throw std::invalid_argument("Ensemble: states must share one dimension");
        }
        total_p += p;
    }
    if (std::abs(total_p - 1.0) > kStructuralTol) {
        throw std::invalid_argument("Ensemble: probabilities must sum to 1");
    }
}

double holevo_quantity(const Ensemble& e) {
    validate(e);
    const int dim = e.entries.front().second.matrix().dim();
    const int qubits = e.entries.front().second.qubit_count();

    ComplexMatrix avg(dim);
    double mean_entropy = 0.0;
    for (const auto& [p, rho] : e.entries) {
        avg = avg + rho.matrix().scaled(Complex(p, 0.0));
        if (p > 0.0) mean_entropy += p * von_neumann_entropy(rho);
    }
    double chi = von_neumann_entropy(DensityOperator(avg, qubits)) - mean_entropy;
    // The plug-in difference can dip a hair below zero from rounding.
    return chi < 0.0 ? 0.0 : chi;
}

SweepRecord noisy_subchannel_chi(double lambda, int mc_samples, std::uint64_t seed) {
    if (mc_samples < 1000) {
        throw std::invalid_argument("noisy_subchannel_chi: mc_samples must be >= 1000");
    }
    NoisyChannelConfig cfg{lambda};
    validate(cfg);

    RandomStream rng(seed);
    DensityOperator e0 = averaged_channel(cfg, DensityOperator::from_pure(PureState::basis(1, 0)),
                                          mc_samples, rng);
    DensityOperator e1 = averaged_channel(cfg, DensityOperator::from_pure(PureState::basis(1, 1)),
                                          mc_samples, rng);

    Ensemble e;
    e.entries.emplace_back(0.5, e0);
    e.entries.emplace_back(0.5, e1);

    SweepRecord rec;
    rec.lambda = lambda;
    rec.chi_bits = holevo_quantity(e);
    rec.mc_samples = mc_samples;
    rec.seed = seed;
    return rec;
}

std::vector<SweepRecord> lambda_sweep(const std::vector<double>& lambdas, int mc_samples,
                                      std::uint64_t master_seed) {
    if (lambdas.empty()) {
        throw std::invalid_argument("lambda_sweep: grid must be nonempty");
    }
    std::vector<SweepRecord> out;
    out.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        out.push_back(
            noisy_subchannel_chi(lambdas[i], mc_samples, RandomStream::derive_seed(master_seed, i)));
    }
    return out;
}

double grid_optimized_chi(double lambda, int mc_samples, std::uint64_t seed) {
    NoisyChannelConfig cfg{lambda};
    validate(cfg);
    RandomStream rng(seed);

    // Extract the averaged channel's affine action on Bloch vectors from
    // four probe states: v -> M v + t.
    auto probe = [&](double x, double y, double z) {
        ComplexMatrix m(2);
        m.at(0, 0) = Complex(0.5 * (1.0 + z), 0.0);
        m.at(0, 1) = Complex(0.5 * x, -0.5 * y);
        m.at(1, 0) = Complex(0.5 * x, 0.5 * y);
        m.at(1, 1) = Complex(0.5 * (1.0 - z), 0.0);
        DensityOperator rho(m, 1);
        return bloch_vector(averaged_channel(cfg, rho, mc_samples, rng));
    };
    std::array<double, 3> bzp = probe(0.0, 0.0, 1.0);
    std::array<double, 3> bzm = probe(0.0, 0.0, -1.0);
    std::array<double, 3> bxp = probe(1.0, 0.0, 0.0);
    std::array<double, 3> byp = probe(0.0, 1.0, 0.0);

    std::array<double, 3> t{};
    std::array<std::array<double, 3>, 3> m_cols{};  // columns of M
    for (int k = 0; k < 3; ++k) {
        auto i = static_cast<std::size_t>(k);
        t[i] = 0.5 * (bzp[i] + bzm[i]);
        m_cols[2][i] = 0.5 * (bzp[i] - bzm[i]);
        m_cols[0][i] = bxp[i] - t[i];
        m_cols[1][i] = byp[i] - t[i];
    }

    auto push = [&](const std::array<double, 3>& v) {
        std::array<double, 3> w = t;
        for (int c = 0; c < 3; ++c)
            for (int r = 0; r < 3; ++r)
                w[static_cast<std::size_t>(r)] +=
                    m_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] *
                    v[static_cast<std::size_t>(c)];
        return w;
    };

    // 32 x 16 azimuth/polar grid of pure input states, polar angles offset
    // off the poles so all 512 points are distinct.
    constexpr int kAz = 32;
    constexpr int kPol = 16;
    std::vector<std::array<double, 3>> outputs;
    outputs.reserve(kAz * kPol);
    for (int b = 0; b < kPol; ++b) {
        double theta = std::numbers::pi * (b + 0.5) / kPol;
        for (int a = 0; a < kAz; ++a) {
            double phi = 2.0 * std::numbers::pi * a / kAz;
            outputs.push_back(push({std::sin(theta) * std::cos(phi),
                                    std::sin(theta) * std::sin(phi), std::cos(theta)}));
        }
    }

    double best = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        for (std::size_t j = i + 1; j < outputs.size(); ++j) {
            std::array<double, 3> mid{0.5 * (outputs[i][0] + outputs[j][0]),
                                      0.5 * (outputs[i][1] + outputs[j][1]),
                                      0.5 * (outputs[i][2] + outputs[j][2])};
            double chi = entropy_from_bloch_length(vec_norm(mid)) -
                         0.5 * (entropy_from_bloch_length(vec_norm(outputs[i])) +
                                entropy_from_bloch_length(vec_norm(outputs[j])));
            if (chi > best) best = chi;
        }
    }
    return best;
}

std::int64_t total(const JointCounts& j) {
    std::int64_t n = 0;
    for (const auto& row : j.counts) {
        for (std::int64_t c : row) {
            if (c < 0) throw std::invalid_argument("JointCounts: counts must be nonnegative");
            n += c;
        }
    }
    return n;
}

double empirical_mutual_information(const JointCounts& j) {
    const std::int64_t n = total(j);
    if (n <= 0) {
        throw std::invalid_argument("empirical_mutual_information: total count must be positive");
    }
    const std::size_t nx = j.counts.size();
    std::size_t ny = 0;
    for (const auto& row : j.counts) ny = std::max(ny, row.size());

    std::vector<double> px(nx, 0.0), py(ny, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < j.counts[x].size(); ++y) {
            double p = static_cast<double>(j.counts[x][y]) / static_cast<double>(n);
            px[x] += p;
            py[y] += p;
        }
    }

    double mi = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < j.counts[x].size(); ++y) {
            if (j.counts[x][y] == 0) continue;
            double p = static_cast<double>(j.counts[x][y]) / static_cast<double>(n);
            mi += p * std::log2(p / (px[x] * py[y]));
        }
    }
    return mi < 0.0 ? 0.0 : mi;
}

BaselineLog run_classical_baseline(bool feedback_enabled, int n_slots, double p_flip,
                                   RandomStream& rng) {
    if (n_slots < 2) {
        throw std::invalid_argument("run_classical_baseline: n_slots must be >= 2");
    }
    if (!(p_flip >= 0.0 && p_flip <= 1.0)) {
        throw std::invalid_argument("run_classical_baseline: p_flip must be in [0, 1]");
    }

    BaselineLog log;
    log.slots = n_slots;
    log.feedback_enabled = feedback_enabled;
    log.p_flip = p_flip;
    log.rows.reserve(static_cast<std::size_t>(n_slots));

    bool repair_pending = false;
    for (int t = 1; t <= n_slots; ++t) {
        BaselineSlotRow row;
        row.slot = t;

        if (feedback_enabled) {
            // Data rides both subchannels; the quiet slot is sacrificed to a
            // retransmission whenever feedback flagged the previous noisy bit.
            row.noisy_bit_in = rng.bit();
            row.noisy_bit_out = bsc_transmit(row.noisy_bit_in, p_flip, rng);
            row.quiet_payload_kind = repair_pending ? "repair" : "fresh";
            row.novel_bits_delivered = (repair_pending ? 0 : 1) +
                                       (row.noisy_bit_out == row.noisy_bit_in ? 1 : 0);
            repair_pending = row.noisy_bit_out != row.noisy_bit_in;
        } else {
            row.quiet_payload_kind = "fresh";
            row.novel_bits_delivered = 1;
        }

        log.novel_bits += row.novel_bits_delivered;
        log.rows.push_back(row);
    }
    return log;
}

double classical_baseline_capacity(bool feedback_enabled, int n_slots, RandomStream& rng,
                                   double p_flip) {
    return run_classical_baseline(feedback_enabled, n_slots, p_flip, rng).throughput_bits_per_slot();
}

}  // namespace qduplex
