// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pvbqc/inattentive.hpp"
#include "pvbqc/modgroup.hpp"
#include "pvbqc/protocol/messages.hpp"
#include "pvbqc/protocol/strategy.hpp"
#include "pvbqc/qsim/state_vector.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc::protocol {

struct BobConfig {
  BobStrategy strategy;
  unsigned key_bits = 32;
  // One group for every round instead of a fresh safe prime per round.
  bool shared_group = false;
};

// Server side. Owns the qubits once they arrive.
class Bob {
 public:
  // `target_rng` draws the strategy's vertex when none is fixed.
  Bob(const BobConfig& config, RandomSource& rng, RandomSource& target_rng);

  void ReceiveQubits(qsim::StateVector state);
  void ReceiveAnnouncement(const AnnounceGraph& message);

  // KeyAndResult, or Abort when the angle cannot be evaluated.
  std::variant<KeyAndResult, Abort> Round(const EncryptedAngle& message);

  // SecretKeys when every revealed trap matches, else Abort.
  std::variant<SecretKeys, Abort> Reveal(const TrapReveal& message);

  std::optional<VertexId> target() const { return target_; }
  const std::vector<int>& measured() const { return measured_; }
  const std::vector<int>& reported() const { return reported_; }

 private:
  bool Hits(VertexId v) const { return target_ && *target_ == v; }
  GroupParams RoundGroup();

  BobConfig config_;
  RandomSource& rng_;
  RandomSource& target_rng_;
  std::optional<qsim::StateVector> state_;
  std::optional<GroupParams> shared_;
  std::optional<VertexId> target_;
  std::vector<KeyHolder> keys_;
  std::vector<int> measured_;
  std::vector<int> reported_;
};

}  // namespace pvbqc::protocol
