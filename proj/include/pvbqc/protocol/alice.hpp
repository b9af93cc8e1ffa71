// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pvbqc/inattentive.hpp"
#include "pvbqc/mbqc.hpp"
#include "pvbqc/protocol/messages.hpp"
#include "pvbqc/qsim/state_vector.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc::protocol {

enum class VerdictReason : std::uint8_t {
  kAccepted,
  kInvalidPublicKey,
  kInvalidCiphertext,
  kUnexpectedMessage,
  kKeysWithheld,
  kInvalidKeypair,
  kComplementViolation,
  kTrapMismatch,
};

std::string_view VerdictReasonName(VerdictReason reason);

struct AliceVerdict {
  bool accepted = false;
  std::optional<std::vector<int>> outcome;  // set iff accepted
  VerdictReason reason = VerdictReason::kKeysWithheld;
};

struct AliceConfig {
  Pattern computation;  // normalized, computation vertices only
  std::size_t traps = 1;
  std::size_t dummy_degree = 1;
};

// Client side. Holds phi, theta, r, d and trap positions; sees Bob's public
// keys and encrypted results, and secret keys only at the end.
class Alice {
 public:
  Alice(const AliceConfig& config, RandomSource& rng);

  // Phase I.
  AnnounceGraph Announce() const;
  std::vector<qsim::QubitPrep> QuantumStates() const;

  // Phase II. Angle for the next round, built from the results received so far.
  EncryptedAngle NextAngle();
  // Checks Bob's round message; returns an abort when it is unacceptable.
  std::optional<Abort> ReceiveResult(const KeyAndResult& message);

  // Phase III.
  TrapReveal RevealTraps() const;
  AliceVerdict Finish(const Message& bob_final);

  std::size_t rounds() const { return graph_.size(); }
  std::size_t completed_rounds() const { return rounds_.size(); }
  const GraphSpec& graph() const { return graph_; }
  const BlindingSecrets& secrets() const { return secrets_; }
  std::vector<VertexId> traps() const { return graph_.VerticesWithRole(Role::kTrap); }
  // Abort reason recorded by ReceiveResult, if any.
  std::optional<VerdictReason> failure() const { return failure_; }

 private:
  AliceVerdict Reject(VerdictReason reason) const { return {false, std::nullopt, reason}; }

  RandomSource& rng_;
  GraphSpec graph_;
  DependencySets deps_;
  BlindingSecrets secrets_;
  std::vector<RoundKey> rounds_;
  std::optional<VerdictReason> failure_;
};

}  // namespace pvbqc::protocol
