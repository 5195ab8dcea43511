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

#ifndef QDUPLEX_PROTOCOL_HPP
#define QDUPLEX_PROTOCOL_HPP

#include "qduplex/channels.hpp"
#include "qduplex/core.hpp"
#include "qduplex/rng.hpp"

namespace qduplex {

/// Two classical bits carried by one superdense-coded pair.
struct BellMessage {
    int b1 = 0;
    int b2 = 0;

    bool operator==(const BellMessage&) const = default;
};

/// Per-pair diagnostic record.
struct PairProtocolTrace {
    BellMessage sent;
    ChannelParam realized_param;
    bool undo_applied = false;
    BellMessage decoded;
    BellOutcome bell_outcome = BellOutcome::PhiPlus;
};

/// Total spin components of a qubit pair, S_k = (sigma_k x I + I x sigma_k)/2.
/// Hermitian, and the singlet is a null vector of each component.
struct TotalSpinOperator {
    ComplexMatrix s_x;
    ComplexMatrix s_y;
    ComplexMatrix s_z;

    static TotalSpinOperator make();
};

/// (|01> - |10>)/sqrt2.
PureState make_singlet();

/// The correction the transmitter applies to the still-local pair member:
/// the same matrix as pauli_exponential(c, lambda).
UnitaryOperator undo_operator(const ChannelParam& c, double lambda);

/// Sends qubit 1 of a fresh singlet through U_channel(c) and applies
/// undo_operator(c) to qubit 2; returns the fidelity with the original
/// singlet (1 up to rounding, for any c and lambda).
double verify_undo_identity(const ChannelParam& c, double lambda);

/// Message -> Pauli table of the codec: 00 -> I, 01 -> X, 10 -> Z, 11 -> Z*X.
UnitaryOperator superdense_pauli(const BellMessage& msg);

/// Encodes two bits onto qubit 2 of a shared singlet. Throws if the pair is
/// not the singlet (protocol misuse); the encoded states for the four
/// messages are pairwise orthogonal Bell states.
PureState superdense_encode(const BellMessage& msg, const PureState& pair);

/// Bell measurement followed by the inverse of the encode table:
/// PsiMinus -> 00, PhiMinus -> 01, PsiPlus -> 10, PhiPlus -> 11.
BellMessage superdense_decode(const PureState& state, RandomStream& rng);

BellMessage bell_outcome_to_message(BellOutcome o);

/// One pair through the full two-subchannel protocol: singlet, noisy
/// subchannel on qubit 1, optional undo from ideal feedback, superdense
/// encoding on qubit 2, quiet subchannel, Bell decoding. With feedback
/// disabled the transmitter still encodes qubit 2 blindly (it cannot
/// inspect the joint state it no longer fully holds).
///
/// fuse_undo_encode multiplies the undo and codec unitaries into a single
/// qubit-2 operator before applying; observable statistics are identical.
PairProtocolTrace run_pair_protocol(const BellMessage& msg, const NoisyChannelConfig& cfg,
                                    bool feedback_enabled, RandomStream& rng,
                                    bool fuse_undo_encode = false);

struct HelperFeedbackResult {
    bool inferred_flip = false;
    bool true_flip = false;
    bool receiver_blind_guess_correct = false;
};

/// One slot of the helper-qubit demonstration: helper initial states are
/// uniform basis states pre-shared with the transmitter, the whole block
/// (helpers + info qubit) sees one shared flip event, the receiver measures
/// the helpers and feeds the outcomes back. The transmitter infers the flip
/// by XOR; a receiver guessing without that shared knowledge is right only
/// by chance.
HelperFeedbackResult helper_feedback_round(const FlipChannelConfig& cfg, int info_bit,
                                           RandomStream& rng);

}  // namespace qduplex

#endif
