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

#include "qduplex/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace qduplex {

void validate(const FeedbackLinkConfig& cfg) {
    if (cfg.quantize_bits < 0) {
        throw std::invalid_argument("FeedbackLinkConfig: quantize_bits must be >= 0");
    }
    if (!(cfg.clamp_range > 0.0) || !std::isfinite(cfg.clamp_range)) {
        throw std::invalid_argument("FeedbackLinkConfig: clamp_range must be positive and finite");
    }
}

ChannelParam quantize_feedback(const ChannelParam& c, const FeedbackLinkConfig& cfg) {
    validate(cfg);
    if (cfg.quantize_bits == 0) return c;

    const double r = cfg.clamp_range;
    const double levels = std::pow(2.0, cfg.quantize_bits);
    const double step = 2.0 * r / (levels - 1.0);

    ChannelParam q;
    for (int k = 0; k < 3; ++k) {
        double v = std::clamp(c.c[static_cast<size_t>(k)], -r, r);
        double idx = std::round((v + r) / step);
        q.c[static_cast<size_t>(k)] = -r + idx * step;
    }
    return q;
}

namespace {

// In-flight pair: first member already went through the noisy subchannel,
// second member still with the transmitter.
struct PendingPair {
    int pair_id = 0;
    int noisy_slot = 0;
    PureState state;
    ChannelParam realized;
};

std::string bits_string(const BellMessage& m) {
    std::string s;
    s.push_back(static_cast<char>('0' + m.b1));
    s.push_back(static_cast<char>('0' + m.b2));
    return s;
}

}  // namespace

TrialLog run_pipeline(int n_slots, const NoisyChannelConfig& cfg, const FeedbackLinkConfig& fb,
                      bool feedback_enabled, RandomStream& message_source, RandomStream& rng,
                      std::uint64_t master_seed) {
    if (n_slots < 2) {
        throw std::invalid_argument("run_pipeline: n_slots must be >= 2");
    }
    validate(cfg);
    validate(fb);

    TrialLog log;
    log.slots = n_slots;
    log.lambda = cfg.lambda;
    log.feedback_enabled = feedback_enabled;
    log.master_seed = master_seed;

    if (!feedback_enabled) {
        // Baseline: the noisy subchannel is useless without the parameter
        // report, so every slot carries one fresh classical bit over the
        // quiet subchannel. Quiet transmission is exact.
        for (int t = 1; t <= n_slots; ++t) {
            int bit = message_source.bit();
            PureState carried = quiet_transmit(PureState::basis(1, bit));
            int decoded = std::norm(carried.amp(1)) > 0.5 ? 1 : 0;
            log.schedule.push_back(SlotSchedule{t, 0, 0});
            log.deliveries.push_back(SlotDelivery{t, std::string(1, static_cast<char>('0' + bit)),
                                                  std::string(1, static_cast<char>('0' + decoded)),
                                                  decoded == bit});
            log.bits_sent += 1;
            if (decoded == bit) log.bits_decoded_correctly += 1;
        }
        return log;
    }

    std::optional<PendingPair> pending;

    for (int t = 1; t <= n_slots; ++t) {
        SlotSchedule slot{t, 0, 0};

        // Noisy subchannel: launch pair t's first member.
        PairTransmissionResult sent = noisy_transmit_member(make_singlet(), 1, cfg, rng);
        PendingPair next_pending{t, t, sent.pair_state, sent.realized_param};
        slot.noisy_payload = t;

        // Quiet subchannel: finish pair t-1 if one is in flight. Its
        // parameter report arrived at the end of slot t-1.
        if (pending) {
            slot.quiet_payload = pending->pair_id;

            BellMessage msg{message_source.bit(), message_source.bit()};
            ChannelParam reported = quantize_feedback(pending->realized, fb);

            PureState pair = pending->state;
            pair = apply_single_qubit(pair, undo_operator(reported, cfg.lambda), 2);
            pair = apply_single_qubit(pair, superdense_pauli(msg), 2);
            pair = quiet_transmit(pair);

            auto [outcome, prob] = measure_bell_basis(pair, rng);
            (void)prob;
            BellMessage decoded = bell_outcome_to_message(outcome);

            PairProtocolTrace trace;
            trace.sent = msg;
            trace.realized_param = pending->realized;
            trace.undo_applied = true;
            trace.decoded = decoded;
            trace.bell_outcome = outcome;
            log.pair_records.push_back(
                PipelinePairRecord{pending->pair_id, pending->noisy_slot, t, trace});

            bool correct = decoded == msg;
            log.deliveries.push_back(SlotDelivery{t, bits_string(msg), bits_string(decoded), correct});
            log.bits_sent += 2;
            log.bits_decoded_correctly += (decoded.b1 == msg.b1 ? 1 : 0) + (decoded.b2 == msg.b2 ? 1 : 0);
            log.completed_pairs += 1;
        }

        pending = next_pending;
        log.schedule.push_back(slot);
    }

    return log;
}

std::int64_t qubits_transmitted(const TrialLog& log) {
    std::int64_t n = 0;
    for (const SlotSchedule& s : log.schedule) {
        if (s.noisy_payload != 0) ++n;
        if (s.quiet_payload != 0) ++n;
    }
    if (!log.feedback_enabled) {
        // Baseline rows leave the pair-id fields empty; each slot still
        // moves one qubit over the quiet subchannel.
        n += log.slots;
    }
    return n;
}

}  // namespace qduplex
