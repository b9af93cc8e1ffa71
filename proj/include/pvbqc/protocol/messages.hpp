// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pvbqc/angles.hpp"
#include "pvbqc/elgamal.hpp"
#include "pvbqc/inattentive.hpp"
#include "pvbqc/mbqc.hpp"

namespace pvbqc::protocol {

enum class Sender : std::uint8_t { kAlice, kBob };

std::string_view SenderName(Sender sender);

// Graph shape only. Vertex ids equal measurement rounds; roles stay secret.
struct AnnounceGraph {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
};

// Round 0 carries its angle in the clear; later rounds carry trees.
struct EncryptedAngle {
  VertexId vertex = 0;
  std::variant<AngleIndex, EncodedDelta> angle;
};

struct KeyAndResult {
  VertexId vertex = 0;
  PublicKey pk;
  BitCiphertext result;
};

struct TrapReveal {
  std::vector<VertexId> traps;
  std::vector<std::pair<VertexId, int>> expected;  // (t, r_t)
};

struct SecretKeys {
  std::vector<std::pair<VertexId, SecretKey>> keys;
};

struct Abort {
  std::string reason;
};

// Alice's public claim after the run. It has no bearing on the judgment.
struct Dispute {
  std::string claim;
};

using Message = std::variant<AnnounceGraph, EncryptedAngle, KeyAndResult, TrapReveal,
                             SecretKeys, Abort, Dispute>;

std::string_view MessageType(const Message& message);

struct Envelope {
  std::uint64_t seq = 0;
  Sender sender = Sender::kAlice;
  Message message;
};

struct SessionInfo {
  std::string session_id;
  unsigned key_bits = 0;
  std::size_t vertices = 0;
};

struct Transcript {
  SessionInfo session;
  std::vector<Envelope> messages;

  void Append(Sender sender, Message message) {
    messages.push_back({messages.size(), sender, std::move(message)});
  }
};

// Drops Alice's construction recipes so a tree can leave her.
void StripRecipes(EncodedDelta& delta);

}  // namespace pvbqc::protocol
