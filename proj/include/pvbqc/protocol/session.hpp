// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pvbqc/mbqc.hpp"
#include "pvbqc/protocol/alice.hpp"
#include "pvbqc/protocol/bob.hpp"
#include "pvbqc/protocol/messages.hpp"
#include "pvbqc/protocol/strategy.hpp"

namespace pvbqc::protocol {

struct SessionConfig {
  Pattern computation;  // computation vertices only; normalized on entry
  std::size_t traps = 1;
  std::size_t dummy_degree = 1;
  unsigned key_bits = 32;
  bool shared_group = false;
  BobStrategy strategy;
  // Alice publishes a "Bob cheats" dispute after the run regardless of it.
  bool free_rider = false;
  std::uint64_t seed = 0;
  std::size_t qubit_cap = qsim::kDefaultQubitCap;
};

struct SessionResult {
  AliceVerdict verdict;
  Transcript transcript;
  std::vector<int> ground_truth;  // unblinded reference execution
  GraphSpec graph;                // with traps and dummies
  std::vector<VertexId> traps;
  std::optional<VertexId> target;
  bool bob_released_keys = false;
  // Diagnostics never sent over the wire.
  BlindingSecrets secrets;
  std::vector<int> bob_measured;

  bool WrongAccept() const {
    return verdict.accepted && verdict.outcome != ground_truth;
  }
};

// Seed streams derived from SessionConfig::seed.
inline constexpr std::uint64_t kAliceStream = 1;
inline constexpr std::uint64_t kBobStream = 2;
inline constexpr std::uint64_t kReferenceStream = 3;
inline constexpr std::uint64_t kTargetStream = 4;

// Runs both parties to completion. Aborts end up in the transcript and the
// verdict; configuration errors throw.
SessionResult RunSession(const SessionConfig& config);

}  // namespace pvbqc::protocol
