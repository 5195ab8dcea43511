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

#ifndef QDUPLEX_CHANNELS_HPP
#define QDUPLEX_CHANNELS_HPP

#include <array>
#include <utility>
#include <vector>

#include "qduplex/core.hpp"
#include "qduplex/rng.hpp"

namespace qduplex {

/// The random rotation axis/strength vector realized by one use of the
/// noisy subchannel. Only the feedback link may carry it back to the
/// transmitter; receiver-side logic never sees it.
struct ChannelParam {
    std::array<double, 3> c{};
};

struct NoisyChannelConfig {
    double lambda = 0.0;  // dimensionless noise strength, >= 0
};

struct FlipChannelConfig {
    double p_flip = 0.5;       // in [0, 1]
    int helpers_per_slot = 1;  // >= 0
};

struct TransmissionResult {
    PureState output_state;
    ChannelParam realized_param;
};

struct PairTransmissionResult {
    PureState pair_state;
    ChannelParam realized_param;
};

void validate(const NoisyChannelConfig& cfg);
void validate(const FlipChannelConfig& cfg);

/// Three i.i.d. standard normal components, via RandomStream::gaussian()
/// (Box-Muller) in x, y, z order.
ChannelParam sample_channel_param(RandomStream& rng);

/// One use of the noisy subchannel on a single qubit: draws c, applies
/// exp(i*lambda*(c . sigma)).
TransmissionResult noisy_transmit(const PureState& state, const NoisyChannelConfig& cfg,
                                  RandomStream& rng);

/// Noisy subchannel acting on one member (1 or 2) of an entangled pair.
/// Same draw and unitary as noisy_transmit, applied to the member's slot
/// of the joint state.
PairTransmissionResult noisy_transmit_member(const PureState& pair, int member,
                                             const NoisyChannelConfig& cfg, RandomStream& rng);

/// Spin-flip channel: with probability p_flip applies sigma_x to every
/// qubit in the block (one shared flip event per slot). All inputs must be
/// computational-basis states. The returned flag records the flip event for
/// test oracles; receiver logic must not read it.
std::pair<std::vector<PureState>, bool> bit_flip_block_transmit(const std::vector<PureState>& block,
                                                                const FlipChannelConfig& cfg,
                                                                RandomStream& rng);

/// The noiseless subchannel: identity.
PureState quiet_transmit(const PureState& state);

/// Monte Carlo average (1/N) sum_i U(c_i) rho U(c_i)^dag over N fresh
/// channel draws, re-symmetrized before the invariants are checked.
DensityOperator averaged_channel(const NoisyChannelConfig& cfg, const DensityOperator& rho,
                                 int n_samples, RandomStream& rng);

/// Binary symmetric channel: flips the bit with probability p.
int bsc_transmit(int bit, double p, RandomStream& rng);

}  // namespace qduplex

#endif
