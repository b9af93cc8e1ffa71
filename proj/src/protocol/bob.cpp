// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/bob.hpp"

#include "pvbqc/errors.hpp"

namespace pvbqc::protocol {

using Kind = BobStrategy::Kind;

Bob::Bob(const BobConfig& config, RandomSource& rng, RandomSource& target_rng)
    : config_(config), rng_(rng), target_rng_(target_rng) {}

void Bob::ReceiveQubits(qsim::StateVector state) { state_ = std::move(state); }

void Bob::ReceiveAnnouncement(const AnnounceGraph& message) {
  if (!state_ || state_->num_qubits() != message.vertices) {
    throw ProtocolError("announced graph does not match the received qubits");
  }
  for (const auto& [a, b] : message.edges) state_->ApplyCz(a, b);
  if (config_.strategy.Targeted()) {
    target_ = config_.strategy.target ? *config_.strategy.target
                                      : static_cast<VertexId>(target_rng_.Below(message.vertices));
  }
}

GroupParams Bob::RoundGroup() {
  if (!config_.shared_group) return GenGroup(config_.key_bits, rng_);
  if (!shared_) shared_ = GenGroup(config_.key_bits, rng_);
  return *shared_;
}

std::variant<KeyAndResult, Abort> Bob::Round(const EncryptedAngle& message) {
  const VertexId i = message.vertex;
  if (!state_ || i != measured_.size() || i >= state_->num_qubits()) {
    return Abort{"out-of-order angle"};
  }
  const Kind kind = config_.strategy.kind;
  AngleIndex delta;
  if (const auto* plain = std::get_if<AngleIndex>(&message.angle)) {
    if (i != 0) return Abort{"plaintext angle after round 0"};
    delta = *plain;
  } else {
    if (i == 0) return Abort{"encrypted angle in round 0"};
    try {
      delta = EvalDelta(keys_, std::get<EncodedDelta>(message.angle), i);
    } catch (const MalformedEncoding&) {
      // Trees built on a pair Bob corrupted no longer evaluate; he presses on.
      if (kind != Kind::kMalformedPair) return Abort{"malformed angle"};
      delta = AngleIndex(0);
    }
  }

  if (Hits(i) && kind == Kind::kOffsetAngle) delta = delta + AngleIndex(config_.strategy.offset);
  if (Hits(i) && kind == Kind::kZBeforeMeasure) state_->ApplyZ(i);
  const int b = state_->MeasureXY(i, delta, rng_);
  measured_.push_back(b);
  const int reported = b ^ static_cast<int>(Hits(i) && kind == Kind::kFlipResult);
  reported_.push_back(reported);

  const KeyPair kp = KeyGen(RoundGroup(), rng_);
  BitCiphertext result;
  if (Hits(i) && kind == Kind::kMalformedPair) {
    const int bit = config_.strategy.malformed_bit & 1;
    result = {Encrypt(kp.pk, bit, rng_), Encrypt(kp.pk, bit, rng_), i};
  } else {
    result = EncryptBitPair(kp.pk, reported, i, rng_);
  }
  keys_.push_back({kp.pk, kp.sk});
  return KeyAndResult{i, kp.pk, std::move(result)};
}

std::variant<SecretKeys, Abort> Bob::Reveal(const TrapReveal& message) {
  if (config_.strategy.kind == Kind::kWithholdKeys) return Abort{"keys withheld"};
  if (message.traps.size() != message.expected.size()) return Abort{"invalid trap reveal"};
  for (const auto& [t, r] : message.expected) {
    if (t >= reported_.size()) return Abort{"invalid trap reveal"};
    if (reported_[t] != r) return Abort{"trap mismatch"};
  }
  SecretKeys out;
  for (VertexId v = 0; v < keys_.size(); ++v) {
    SecretKey sk = keys_[v].sk;
    if (Hits(v) && config_.strategy.kind == Kind::kFakeSecretKey) {
      sk.x = (sk.x + 1) % keys_[v].pk.group.p;
    }
    out.keys.emplace_back(v, std::move(sk));
  }
  return out;
}

}  // namespace pvbqc::protocol
