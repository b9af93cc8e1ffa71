// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Third-party judgment from the classical transcript alone.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pvbqc/protocol/messages.hpp"

namespace pvbqc::verifier {

enum class Verdict : std::uint8_t {
  kAcceptedOutcome,
  kBobWithheldOrCheated,
  kInvalidTranscript,
};

// Checks in the order they run.
enum class Check : std::uint8_t {
  kStructure,
  kPublicKeys,
  kCiphertexts,
  kKeysPresent,
  kKeypairs,
  kComplement,
  kTraps,
};
inline constexpr std::size_t kNumChecks = 7;

enum class Status : std::uint8_t { kSkipped, kPass, kFail };

std::string_view VerdictName(Verdict verdict);
std::string_view CheckName(Check check);

struct Judgment {
  Verdict verdict = Verdict::kInvalidTranscript;
  std::optional<Check> failing;
  std::string detail;  // human-readable note on the failing check
  std::array<Status, kNumChecks> status{};

  Status StatusOf(Check check) const { return status[static_cast<std::size_t>(check)]; }
};

// Structural problem (sequence numbers, phase order, one round message per
// vertex, trap set inside V, expected results exactly on the traps), or
// nullopt for a well-formed transcript.
std::optional<std::string> StructuralProblem(const protocol::Transcript& transcript);

bool ReplayCheck(const protocol::Transcript& transcript);

// Accepts iff the structure is sound, every public key and result
// ciphertext is valid, every secret key was revealed and matches its public
// key, every result pair decrypts to complementary bits and every trap
// decrypts to its announced value. Disputes filed by Alice are ignored.
Judgment Judge(const protocol::Transcript& transcript);

// Per-check report, one "name: status" line each, then the verdict.
std::string FormatReport(const Judgment& judgment);

}  // namespace pvbqc::verifier
