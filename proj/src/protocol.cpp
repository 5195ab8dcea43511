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

#include "qduplex/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace qduplex {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix pauli_x_matrix() {
    ComplexMatrix m(2);
    m.at(0, 1) = Complex(1.0, 0.0);
    m.at(1, 0) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix pauli_y_matrix() {
    ComplexMatrix m(2);
    m.at(0, 1) = Complex(0.0, -1.0);
    m.at(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z_matrix() {
    ComplexMatrix m(2);
    m.at(0, 0) = Complex(1.0, 0.0);
    m.at(1, 1) = Complex(-1.0, 0.0);
    return m;
}

ComplexMatrix total_spin_component(const ComplexMatrix& sigma) {
    ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix sum = kronecker(sigma, id) + kronecker(id, sigma);
    return sum.scaled(Complex(0.5, 0.0));
}

// Reads the classical bit out of a one-qubit computational-basis state.
int basis_bit(const PureState& s) {
    if (s.qubit_count() != 1) {
        throw std::invalid_argument("basis_bit: expects a one-qubit state");
    }
    if (std::norm(s.amp(0)) > 1.0 - kStructuralTol) return 0;
    if (std::norm(s.amp(1)) > 1.0 - kStructuralTol) return 1;
    throw std::invalid_argument("basis_bit: state is not a basis state");
}

}  // namespace

TotalSpinOperator TotalSpinOperator::make() {
    TotalSpinOperator s;
    s.s_x = total_spin_component(pauli_x_matrix());
    s.s_y = total_spin_component(pauli_y_matrix());
    s.s_z = total_spin_component(pauli_z_matrix());
    return s;
}

PureState make_singlet() {
    std::vector<Complex> amps(4, Complex(0.0, 0.0));
    amps[1] = Complex(kInvSqrt2, 0.0);
    amps[2] = Complex(-kInvSqrt2, 0.0);
    return PureState(amps, 2);
}

UnitaryOperator undo_operator(const ChannelParam& c, double lambda) {
    return pauli_exponential(c.c, lambda);
}

double verify_undo_identity(const ChannelParam& c, double lambda) {
    PureState singlet = make_singlet();
    UnitaryOperator u = pauli_exponential(c.c, lambda);
    PureState after = apply_single_qubit(singlet, u, 1);
    after = apply_single_qubit(after, undo_operator(c, lambda), 2);
    return fidelity(after, singlet);
}

UnitaryOperator superdense_pauli(const BellMessage& msg) {
    if ((msg.b1 != 0 && msg.b1 != 1) || (msg.b2 != 0 && msg.b2 != 1)) {
        throw std::invalid_argument("superdense_pauli: message bits must be 0 or 1");
    }
    if (msg.b1 == 0 && msg.b2 == 0) return UnitaryOperator::identity(1);
    if (msg.b1 == 0 && msg.b2 == 1) return UnitaryOperator(pauli_x_matrix(), 1);
    if (msg.b1 == 1 && msg.b2 == 0) return UnitaryOperator(pauli_z_matrix(), 1);
    return UnitaryOperator(pauli_z_matrix() * pauli_x_matrix(), 1);
}

PureState superdense_encode(const BellMessage& msg, const PureState& pair) {
    if (pair.qubit_count() != 2) {
        throw std::invalid_argument("superdense_encode: expects a two-qubit state");
    }
    if (fidelity(pair, make_singlet()) < 1.0 - kNumericTol) {
        throw std::invalid_argument("superdense_encode: pair is not the shared singlet");
    }
    return apply_single_qubit(pair, superdense_pauli(msg), 2);
}

BellMessage bell_outcome_to_message(BellOutcome o) {
    switch (o) {
        case BellOutcome::PsiMinus: return BellMessage{0, 0};
        case BellOutcome::PhiMinus: return BellMessage{0, 1};
        case BellOutcome::PsiPlus:  return BellMessage{1, 0};
        case BellOutcome::PhiPlus:  return BellMessage{1, 1};
    }
    throw std::logic_error("bell_outcome_to_message: unreachable");
}

BellMessage superdense_decode(const PureState& state, RandomStream& rng) {
    auto [outcome, prob] = measure_bell_basis(state, rng);
    (void)prob;
    return bell_outcome_to_message(outcome);
}

PairProtocolTrace run_pair_protocol(const BellMessage& msg, const NoisyChannelConfig& cfg,
                                    bool feedback_enabled, RandomStream& rng,
                                    bool fuse_undo_encode) {
    PairProtocolTrace trace;
    trace.sent = msg;

    PureState pair = make_singlet();
    PairTransmissionResult sent = noisy_transmit_member(pair, 1, cfg, rng);
    pair = sent.pair_state;
    trace.realized_param = sent.realized_param;

    if (feedback_enabled) {
        // Receiver reports the realized parameter; the transmitter undoes the
        // disturbance from its side before encoding.
        UnitaryOperator undo = undo_operator(sent.realized_param, cfg.lambda);
        if (fuse_undo_encode) {
            pair = apply_single_qubit(pair, superdense_pauli(msg) * undo, 2);
        } else {
            pair = apply_single_qubit(pair, undo, 2);
            pair = superdense_encode(msg, pair);
        }
        trace.undo_applied = true;
    } else {
        // No report: the transmitter applies the codec Pauli blindly to its
        // member of the (now disturbed) pair.
        pair = apply_single_qubit(pair, superdense_pauli(msg), 2);
    }

    // Qubit 2 crosses the quiet subchannel; acting with the identity on one
    // member leaves the joint state unchanged.
    pair = quiet_transmit(pair);

    auto [outcome, prob] = measure_bell_basis(pair, rng);
    (void)prob;
    trace.bell_outcome = outcome;
    trace.decoded = bell_outcome_to_message(outcome);
    return trace;
}

HelperFeedbackResult helper_feedback_round(const FlipChannelConfig& cfg, int info_bit,
                                           RandomStream& rng) {
    validate(cfg);
    if (info_bit != 0 && info_bit != 1) {
        throw std::invalid_argument("helper_feedback_round: info_bit must be 0 or 1");
    }

    // Helper initial bits are drawn uniformly and known to the transmitter.
    std::vector<int> helper_bits(static_cast<size_t>(cfg.helpers_per_slot));
    for (int& b : helper_bits) b = rng.bit();

    std::vector<PureState> block;
    block.reserve(helper_bits.size() + 1);
    for (int b : helper_bits) block.push_back(PureState::basis(1, b));
    block.push_back(PureState::basis(1, info_bit));

    auto [out_block, flipped] = bit_flip_block_transmit(block, cfg, rng);

    // Receiver measures the helpers (basis states stay basis states under X)
    // and feeds the outcomes back over the noiseless classical channel.
    HelperFeedbackResult r;
    r.true_flip = flipped;
    int measured_first = basis_bit(out_block[0]);
    r.inferred_flip = (measured_first ^ helper_bits[0]) != 0;

    // A receiver that never saw the helper seeds can only guess.
    bool blind_guess = rng.bit() != 0;
    r.receiver_blind_guess_correct = (blind_guess == flipped);
    return r;
}

}  // namespace qduplex
