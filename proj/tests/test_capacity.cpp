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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qduplex/capacity.hpp"
#include "qduplex/simulation.hpp"

using namespace qduplex;

namespace {

DensityOperator bloch_state(double x, double y, double z) {
    ComplexMatrix m(2);
    m.at(0, 0) = Complex(0.5 * (1.0 + z), 0.0);
    m.at(0, 1) = Complex(0.5 * x, -0.5 * y);
    m.at(1, 0) = Complex(0.5 * x, 0.5 * y);
    m.at(1, 1) = Complex(0.5 * (1.0 - z), 0.0);
    return DensityOperator(m, 1);
}

}  // namespace

TEST_CASE("holevo quantity: textbook values") {
    DensityOperator zero = DensityOperator::from_pure(PureState::basis(1, 0));
    DensityOperator one = DensityOperator::from_pure(PureState::basis(1, 1));

    Ensemble orthogonal{{{0.5, zero}, {0.5, one}}};
    CHECK(holevo_quantity(orthogonal) == doctest::Approx(1.0).epsilon(1e-12));

    Ensemble identical{{{0.5, zero}, {0.5, zero}}};
    CHECK(holevo_quantity(identical) == doctest::Approx(0.0).epsilon(1e-12));

    // Antipodal Bloch vectors of length 1/2: average is fully mixed, each
    // component has eigenvalues (3/4, 1/4).
    Ensemble shrunk{{{0.5, bloch_state(0.0, 0.0, 0.5)}, {0.5, bloch_state(0.0, 0.0, -0.5)}}};
    CHECK(holevo_quantity(shrunk) ==
          doctest::Approx(oracle::kOneMinusH2OfThreeQuarters).epsilon(1e-9));
}

TEST_CASE("holevo quantity: validation and bounds") {
    DensityOperator q0 = DensityOperator::from_pure(PureState::basis(1, 0));
    DensityOperator pair = DensityOperator::from_pure(PureState::basis(2, 0));

    CHECK_THROWS_AS(holevo_quantity(Ensemble{{{0.5, q0}, {0.5, pair}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Ensemble{{{0.7, q0}, {0.7, q0}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Ensemble{{{-0.5, q0}, {1.5, q0}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Ensemble{}), std::invalid_argument);

    // chi >= 0, and 0 only for indistinguishable ensembles.
    Ensemble near{{{0.5, bloch_state(0.0, 0.0, 0.1)}, {0.5, bloch_state(0.1, 0.0, 0.0)}}};
    double chi = holevo_quantity(near);
    CHECK(chi >= 0.0);
    CHECK(chi > 1e-4);
    Ensemble same{{{0.25, bloch_state(0.2, 0.1, 0.3)}, {0.75, bloch_state(0.2, 0.1, 0.3)}}};
    CHECK(holevo_quantity(same) < 1e-10);
}

TEST_CASE("noisy subchannel chi: exact at zero noise, deterministic per seed") {
    SweepRecord r0 = noisy_subchannel_chi(0.0, 1000, 606);
    CHECK(r0.chi_bits == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r0.lambda == 0.0);
    CHECK(r0.mc_samples == 1000);
    CHECK(r0.seed == 606);

    SweepRecord a = noisy_subchannel_chi(2.0, 5000, 17);
    SweepRecord b = noisy_subchannel_chi(2.0, 5000, 17);
    CHECK(a.chi_bits == b.chi_bits);

    CHECK_THROWS_AS(noisy_subchannel_chi(1.0, 999, 1), std::invalid_argument);
}

TEST_CASE("noisy subchannel chi follows the contraction closed form") {
    // chi(lambda) = 1 - H2((1 + a(lambda))/2) with a the Bloch contraction.
    // a -> 1/3 as lambda grows, so chi settles at 1 - H2(2/3) ~ 0.0817
    // rather than decaying to zero; lambda = 5 sits on that plateau.
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        SweepRecord r = noisy_subchannel_chi(lambda, 100000, 90001);
        double expected = oracle::chi_of_contraction(oracle::bloch_contraction(lambda));
        CHECK(std::abs(r.chi_bits - expected) < 0.01);
        CHECK(r.chi_bits >= 0.0);
        CHECK(r.chi_bits <= 1.0 + 1e-6);
    }
    SweepRecord plateau = noisy_subchannel_chi(5.0, 100000, 90001);
    CHECK(std::abs(plateau.chi_bits - oracle::kChiLimit) < 0.01);
    CHECK(plateau.chi_bits > 0.05);  // nowhere near full collapse
}

TEST_CASE("lambda sweep: shape, endpoints, and per-point streams") {
    std::vector<SweepRecord> single = lambda_sweep({0.0}, 1000, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].chi_bits == doctest::Approx(1.0).epsilon(1e-6));

    std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 5.0};
    std::vector<SweepRecord> records = lambda_sweep(grid, 20000, 42);
    REQUIRE(records.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(records[i].lambda == grid[i]);
        CHECK(records[i].mc_samples == 20000);
        CHECK(records[i].seed == RandomStream::derive_seed(42, i));
        CHECK(records[i].chi_bits >= 0.0);
        CHECK(records[i].chi_bits <= 1.0 + 1e-6);
    }
    CHECK(records.front().chi_bits >= records.back().chi_bits);

    CHECK_THROWS_AS(lambda_sweep({}, 1000, 1), std::invalid_argument);
}

TEST_CASE("grid-optimized chi agrees with the fixed computational ensemble") {
    // The channel is isotropic, so the best pure-state pair on the Bloch
    // grid does no better than the z-axis pair, up to Monte Carlo noise.
    double fixed = noisy_subchannel_chi(1.0, 20000, 55005).chi_bits;
    double optimized = grid_optimized_chi(1.0, 20000, 55005);
    CHECK(optimized >= 0.0);
    CHECK(optimized <= 1.0 + 1e-6);
    CHECK(std::abs(optimized - fixed) < 0.02);
}

TEST_CASE("empirical mutual information: exact reference tables") {
    JointCounts flat{{{250, 250}, {250, 250}}};
    CHECK(empirical_mutual_information(flat) == doctest::Approx(0.0).epsilon(1e-12));

    JointCounts diagonal{{{5000, 0}, {0, 5000}}};
    CHECK(empirical_mutual_information(diagonal) == doctest::Approx(1.0).epsilon(1e-12));

    // Uniform-input binary symmetric channel with flip rate 0.11, exact
    // expected counts: I = 1 - H2(0.11).
    JointCounts bsc{{{8900, 1100}, {1100, 8900}}};
    CHECK(empirical_mutual_information(bsc) ==
          doctest::Approx(oracle::kOneMinusH2OfElevenHundredths).epsilon(1e-12));

    CHECK_THROWS_AS(empirical_mutual_information(JointCounts{{{0, 0}, {0, 0}}}),
                    std::invalid_argument);
    CHECK(total(bsc) == 20000);
}

TEST_CASE("empirical mutual information: range bounds on sampled tables") {
    RandomStream rng(8642);
    for (int trial = 0; trial < 50; ++trial) {
        JointCounts j{{{0, 0, 0}, {0, 0, 0}}};  // 2 x 3
        for (int i = 0; i < 300; ++i) {
            int x = rng.bit();
            int y = static_cast<int>(rng.uniform01() * 3.0);
            j.counts[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += 1;
        }
        double mi = empirical_mutual_information(j);
        CHECK(mi >= -1e-12);
        CHECK(mi <= 1.0 + 1e-12);  // min(log2 2, log2 3)
    }
}

TEST_CASE("classical baseline: quiet-only mode is exactly one bit per slot") {
    RandomStream rng(7);
    BaselineLog log = run_classical_baseline(false, 500, 0.5, rng);
    CHECK(log.novel_bits == 500);
    CHECK(log.throughput_bits_per_slot() == 1.0);
    for (const BaselineSlotRow& row : log.rows) {
        CHECK(row.noisy_bit_in == -1);
        CHECK(row.noisy_bit_out == -1);
        CHECK(row.quiet_payload_kind == "fresh");
        CHECK(row.novel_bits_delivered == 1);
    }
}

TEST_CASE("classical baseline: retransmission strategy gains nothing at p = 1/2") {
    RandomStream rng(20260814);
    const int n = 10000;
    BaselineLog log = run_classical_baseline(true, n, 0.5, rng);
    CHECK(std::abs(log.throughput_bits_per_slot() - 1.0) < 0.02);

    // Row audit: a corrupted noisy bit forces the next quiet slot into
    // repair mode, and repairs deliver nothing novel over the quiet side.
    std::int64_t recount = 0;
    for (std::size_t i = 0; i < log.rows.size(); ++i) {
        const BaselineSlotRow& row = log.rows[i];
        recount += row.novel_bits_delivered;
        bool corrupted = row.noisy_bit_in != row.noisy_bit_out;
        if (i + 1 < log.rows.size()) {
            CHECK(log.rows[i + 1].quiet_payload_kind == (corrupted ? "repair" : "fresh"));
        }
        int quiet_novel = row.quiet_payload_kind == "fresh" ? 1 : 0;
        int noisy_novel = corrupted ? 0 : 1;
        CHECK(row.novel_bits_delivered == quiet_novel + noisy_novel);
    }
    CHECK(recount == log.novel_bits);
}

TEST_CASE("classical baseline: clean channels saturate at two bits per slot") {
    RandomStream rng(99);
    CHECK(classical_baseline_capacity(true, 1000, rng, 0.0) == 2.0);
}

TEST_CASE("feedback doubles quantum throughput but not classical throughput") {
    auto pipeline_throughput = [](bool feedback) {
        RandomStream messages(RandomStream::derive_seed(4000, 1));
        RandomStream physics(RandomStream::derive_seed(4000, 2));
        TrialLog log = run_pipeline(1000, NoisyChannelConfig{10.0}, FeedbackLinkConfig{},
                                    feedback, messages, physics, 4000);
        return log.throughput_bits_per_slot();
    };
    double quantum_gain = pipeline_throughput(true) - pipeline_throughput(false);
    CHECK(quantum_gain >= 0.9);

    RandomStream rng_on(3131), rng_off(3131);
    double classical_gain = classical_baseline_capacity(true, 10000, rng_on) -
                            classical_baseline_capacity(false, 10000, rng_off);
    CHECK(std::abs(classical_gain) <= 0.05);
}
