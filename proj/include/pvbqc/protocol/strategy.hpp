// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pvbqc/elgamal.hpp"

namespace pvbqc::protocol {

struct BobStrategy {
  enum class Kind : std::uint8_t {
    kHonest,
    kFlipResult,      // reports the complement of the measured bit
    kOffsetAngle,     // measures at delta + offset
    kZBeforeMeasure,  // applies Z to the qubit before measuring
    kFakeSecretKey,   // reveals x + 1 mod p instead of x
    kMalformedPair,   // sends (0*, 0*) or (1*, 1*)
    kWithholdKeys,    // never reveals keys
  };

  Kind kind = Kind::kHonest;
  // Vertex the deviation applies to; nullopt draws one uniformly per session.
  std::optional<VertexId> target;
  int offset = 2;          // kOffsetAngle, in units of pi/4
  int malformed_bit = 0;   // kMalformedPair: 0 -> both-zero, 1 -> both-one

  bool Targeted() const {
    return kind != Kind::kHonest && kind != Kind::kWithholdKeys;
  }

  static BobStrategy Honest() { return {}; }
  static BobStrategy FlipResult(std::optional<VertexId> v = std::nullopt) {
    return {Kind::kFlipResult, v};
  }
  static BobStrategy OffsetAngle(std::optional<VertexId> v = std::nullopt, int offset = 2) {
    return {Kind::kOffsetAngle, v, offset};
  }
  static BobStrategy ZBeforeMeasure(std::optional<VertexId> v = std::nullopt) {
    return {Kind::kZBeforeMeasure, v};
  }
  static BobStrategy FakeSecretKey(std::optional<VertexId> v = std::nullopt) {
    return {Kind::kFakeSecretKey, v};
  }
  static BobStrategy MalformedPair(std::optional<VertexId> v = std::nullopt, int bit = 0) {
    return {Kind::kMalformedPair, v, 2, bit};
  }
  static BobStrategy WithholdKeys() { return {Kind::kWithholdKeys, std::nullopt}; }
};

// Names: honest, flip-result, offset-angle, z-before-measure, fake-secret-key,
// malformed-pair-zero, malformed-pair-one, withhold-keys.
std::string StrategyName(const BobStrategy& strategy);

// Inverse of StrategyName (target left empty). Throws InvalidArgument.
BobStrategy ParseStrategy(std::string_view name);

}  // namespace pvbqc::protocol
