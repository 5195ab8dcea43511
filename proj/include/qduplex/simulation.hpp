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

#ifndef QDUPLEX_SIMULATION_HPP
#define QDUPLEX_SIMULATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qduplex/channels.hpp"
#include "qduplex/protocol.hpp"
#include "qduplex/rng.hpp"

namespace qduplex {

/// Feedback link realism knobs. quantize_bits = 0 means the exact real
/// vector is reported (the idealized link); otherwise each component is
/// clipped to [-clamp_range, clamp_range] and snapped to one of
/// 2^quantize_bits uniform levels spanning that interval inclusively.
struct FeedbackLinkConfig {
    int quantize_bits = 0;
    double clamp_range = 5.0;
};

void validate(const FeedbackLinkConfig& cfg);

ChannelParam quantize_feedback(const ChannelParam& c, const FeedbackLinkConfig& cfg);

/// What each subchannel carries during one slot. Pair ids are 1-based;
/// 0 means the subchannel is idle (or, for the quiet side in baseline
/// mode, carrying a classical bit rather than a pair member).
struct SlotSchedule {
    int slot_index = 0;
    int noisy_payload = 0;
    int quiet_payload = 0;
};

/// One completed delivery at the receiver: a two-bit pair message, or a
/// single classical bit in baseline (feedback off) mode.
struct SlotDelivery {
    int slot_index = 0;
    std::string message;
    std::string decoded;
    bool correct = false;
};

/// Full per-pair account used by the causality checks: where the channel
/// parameter was sampled and where the undo consumed it.
struct PipelinePairRecord {
    int pair_id = 0;
    int noisy_slot = 0;
    int quiet_slot = 0;
    PairProtocolTrace trace;
};

struct TrialLog {
    int slots = 0;
    std::int64_t bits_sent = 0;
    std::int64_t bits_decoded_correctly = 0;
    int completed_pairs = 0;
    double lambda = 0.0;
    bool feedback_enabled = true;
    std::uint64_t master_seed = 0;
    std::vector<SlotSchedule> schedule;
    std::vector<SlotDelivery> deliveries;
    std::vector<PipelinePairRecord> pair_records;

    double throughput_bits_per_slot() const {
        return slots > 0 ? static_cast<double>(bits_decoded_correctly) / slots : 0.0;
    }
};

/// Runs the pipelined schedule: slot 1 launches pair 1's first member over
/// the noisy subchannel; every later slot t carries pair (t-1)'s re-encoded
/// second member over the quiet subchannel and pair t's first member over
/// the noisy one. Feedback for a slot's noisy transmission reaches the
/// transmitter before the next slot begins, so n_slots slots complete
/// n_slots - 1 pairs.
///
/// With feedback_enabled = false no pairs are run at all: the transmitter
/// sends one fresh classical bit per slot over the quiet subchannel and
/// ignores the noisy one.
///
/// message_source supplies the payload bits; rng drives the physics.
/// master_seed is only stamped into the log for reporting.
TrialLog run_pipeline(int n_slots, const NoisyChannelConfig& cfg, const FeedbackLinkConfig& fb,
                      bool feedback_enabled, RandomStream& message_source, RandomStream& rng,
                      std::uint64_t master_seed = 0);

/// Qubit transmissions consumed by a run: both subchannels count, one qubit
/// per occupied subchannel per slot.
std::int64_t qubits_transmitted(const TrialLog& log);

}  // namespace qduplex

#endif
