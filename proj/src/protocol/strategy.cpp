// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/strategy.hpp"

#include "pvbqc/errors.hpp"

namespace pvbqc::protocol {

std::string StrategyName(const BobStrategy& strategy) {
  using Kind = BobStrategy::Kind;
  switch (strategy.kind) {
    case Kind::kHonest: return "honest";
    case Kind::kFlipResult: return "flip-result";
    case Kind::kOffsetAngle: return "offset-angle";
    case Kind::kZBeforeMeasure: return "z-before-measure";
    case Kind::kFakeSecretKey: return "fake-secret-key";
    case Kind::kMalformedPair:
      return strategy.malformed_bit ? "malformed-pair-one" : "malformed-pair-zero";
    case Kind::kWithholdKeys: return "withhold-keys";
  }
  return "?";
}

BobStrategy ParseStrategy(std::string_view name) {
  if (name == "honest") return BobStrategy::Honest();
  if (name == "flip-result") return BobStrategy::FlipResult();
  if (name == "offset-angle") return BobStrategy::OffsetAngle();
  if (name == "z-before-measure") return BobStrategy::ZBeforeMeasure();
  if (name == "fake-secret-key" || name == "fake-keys") return BobStrategy::FakeSecretKey();
  if (name == "malformed-pair-zero") return BobStrategy::MalformedPair(std::nullopt, 0);
  if (name == "malformed-pair-one") return BobStrategy::MalformedPair(std::nullopt, 1);
  if (name == "withhold-keys") return BobStrategy::WithholdKeys();
  throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace pvbqc::protocol
