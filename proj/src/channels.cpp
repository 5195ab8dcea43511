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

#include "qduplex/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qduplex {

namespace {

// Basis label of a computational-basis single-qubit state, or -1.
int basis_label(const PureState& s) {
    if (s.qubit_count() != 1) {
        return -1;
    }
    for (int i = 0; i < 2; i++) {
        if (std::abs(std::abs(s.amp(i)) - 1.0) <= kStructuralTol) {
            return i;
        }
    }
    return -1;
}

}  // namespace

void validate(const NoisyChannelConfig& cfg) {
    if (!std::isfinite(cfg.lambda) || cfg.lambda < 0.0) {
        throw std::invalid_argument("noisy channel lambda must be finite and >= 0");
    }
}

void validate(const FlipChannelConfig& cfg) {
    if (!(cfg.p_flip >= 0.0 && cfg.p_flip <= 1.0)) {
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    }
    if (cfg.helpers_per_slot < 0) {
        throw std::invalid_argument("helpers_per_slot must be >= 0");
    }
}

ChannelParam sample_channel_param(RandomStream& rng) {
    ChannelParam p;
    p.c[0] = rng.gaussian();
    p.c[1] = rng.gaussian();
    p.c[2] = rng.gaussian();
    return p;
}

TransmissionResult noisy_transmit(const PureState& state, const NoisyChannelConfig& cfg,
                                  RandomStream& rng) {
    validate(cfg);
    if (state.qubit_count() != 1) {
        throw std::invalid_argument("noisy_transmit carries one qubit per use");
    }
    const ChannelParam param = sample_channel_param(rng);
    const UnitaryOperator u = pauli_exponential(param.c, cfg.lambda);
    return {apply_unitary(state, u), param};
}

PairTransmissionResult noisy_transmit_member(const PureState& pair, int member,
                                             const NoisyChannelConfig& cfg, RandomStream& rng) {
    validate(cfg);
    if (pair.qubit_count() != 2) {
        throw std::invalid_argument("noisy_transmit_member expects a two-qubit state");
    }
    const ChannelParam param = sample_channel_param(rng);
    const UnitaryOperator u = pauli_exponential(param.c, cfg.lambda);
    return {apply_single_qubit(pair, u, member), param};
}

std::pair<std::vector<PureState>, bool> bit_flip_block_transmit(const std::vector<PureState>& block,
                                                                const FlipChannelConfig& cfg,
                                                                RandomStream& rng) {
    validate(cfg);
    for (const PureState& s : block) {
        if (basis_label(s) < 0) {
            throw std::invalid_argument("flip channel carries computational-basis qubits only");
        }
    }
    const bool flip = rng.bernoulli(cfg.p_flip);
    std::vector<PureState> out;
    out.reserve(block.size());
    for (const PureState& s : block) {
        out.push_back(flip ? apply_unitary(s, paulis().sigma_x) : s);
    }
    return {std::move(out), flip};
}

PureState quiet_transmit(const PureState& state) {
    return state;
}

DensityOperator averaged_channel(const NoisyChannelConfig& cfg, const DensityOperator& rho,
                                 int n_samples, RandomStream& rng) {
    validate(cfg);
    if (n_samples < 1) {
        throw std::invalid_argument("averaged_channel needs n_samples >= 1");
    }
    if (rho.qubit_count() != 1) {
        throw std::invalid_argument("averaged_channel expects a one-qubit state");
    }
    ComplexMatrix acc(2);
    for (int i = 0; i < n_samples; i++) {
        const ChannelParam param = sample_channel_param(rng);
        const ComplexMatrix u = pauli_exponential(param.c, cfg.lambda).matrix();
        acc = acc + u * rho.matrix() * u.adjoint();
    }
    acc = acc.scaled(1.0 / n_samples);
    // Re-symmetrize and rescale so rounding drift cannot trip the invariants.
    acc = (acc + acc.adjoint()).scaled(0.5);
    acc = acc.scaled(1.0 / acc.trace().real());
    return DensityOperator(std::move(acc), 1);
}

int bsc_transmit(int bit, double p, RandomStream& rng) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bsc_transmit carries single bits");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    }
    return rng.bernoulli(p) ? 1 - bit : bit;
}

}  // namespace qduplex
