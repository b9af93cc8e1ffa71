// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "pvbqc/elgamal.hpp"

namespace pvbqc::verifier {

using namespace pvbqc::protocol;

namespace {

std::optional<std::string> TreeProblem(const EncodedDelta& delta, std::size_t length) {
  std::optional<std::string> problem;
  for (const Level3& l3 : delta.bits) {
    for (const Level2& l2 : l3.entries) {
      for (const auto& pair : l2.pairs) {
        for (const Level1& l1 : pair) {
          if (l1.entries.size() != length) return "level-1 sequence of the wrong length";
          for (std::size_t j = 0; j < length; ++j) {
            if (l1.entries[j].key_index != j) return "level-1 entry under the wrong key";
          }
        }
      }
    }
  }
  return problem;
}

template <typename T>
const T* As(const Envelope& env, Sender sender) {
  return env.sender == sender ? std::get_if<T>(&env.message) : nullptr;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAcceptedOutcome: return "AcceptedOutcome";
    case Verdict::kBobWithheldOrCheated: return "BobWithheldOrCheated";
    case Verdict::kInvalidTranscript: return "InvalidTranscript";
  }
  return "?";
}

std::string_view CheckName(Check check) {
  switch (check) {
    case Check::kStructure: return "structure";
    case Check::kPublicKeys: return "public-keys";
    case Check::kCiphertexts: return "ciphertexts";
    case Check::kKeysPresent: return "keys-present";
    case Check::kKeypairs: return "keypairs";
    case Check::kComplement: return "complement";
    case Check::kTraps: return "traps";
  }
  return "?";
}

std::optional<std::string> StructuralProblem(const Transcript& transcript) {
  const auto& msgs = transcript.messages;
  if (msgs.empty()) return "empty transcript";
  for (std::size_t k = 0; k < msgs.size(); ++k) {
    if (msgs[k].seq != k) return "sequence number " + std::to_string(k) + " out of place";
  }

  const auto* announce = As<AnnounceGraph>(msgs[0], Sender::kAlice);
  if (announce == nullptr) return "transcript must open with Alice's graph announcement";
  const std::size_t n = announce->vertices;
  if (n == 0 || n != transcript.session.vertices) return "vertex count mismatch";
  std::set<Edge> edges;
  for (auto [a, b] : announce->edges) {
    if (a >= n || b >= n || a == b) return "announced edge is not a simple edge of V";
    if (!edges.insert({std::min(a, b), std::max(a, b)}).second) return "duplicate edge";
  }

  std::size_t idx = 1;
  bool aborted = false;
  const auto at_abort = [&] {
    if (idx < msgs.size() && std::holds_alternative<Abort>(msgs[idx].message)) {
      aborted = true;
      ++idx;
    }
    return aborted;
  };
  for (VertexId i = 0; i < n && !aborted; ++i) {
    if (at_abort()) break;
    if (idx >= msgs.size()) return "transcript ends during round " + std::to_string(i);
    const auto* angle = As<EncryptedAngle>(msgs[idx], Sender::kAlice);
    if (angle == nullptr || angle->vertex != i) {
      return "expected Alice's angle for vertex " + std::to_string(i);
    }
    const auto* delta = std::get_if<EncodedDelta>(&angle->angle);
    if ((i == 0) != (delta == nullptr)) return "round 0 alone carries a plaintext angle";
    if (delta != nullptr) {
      if (auto problem = TreeProblem(*delta, i)) return *problem;
    }
    ++idx;
    if (at_abort()) break;
    if (idx >= msgs.size()) return "transcript ends during round " + std::to_string(i);
    const auto* result = As<KeyAndResult>(msgs[idx], Sender::kBob);
    if (result == nullptr || result->vertex != i || result->result.key_index != i) {
      return "expected Bob's key and result for vertex " + std::to_string(i);
    }
    ++idx;
  }

  if (!aborted) {
    if (idx >= msgs.size()) return "missing trap reveal";
    const auto* reveal = As<TrapReveal>(msgs[idx], Sender::kAlice);
    if (reveal == nullptr) return "expected Alice's trap reveal";
    std::set<VertexId> traps;
    for (VertexId t : reveal->traps) {
      if (t >= n) return "trap outside V";
      if (!traps.insert(t).second) return "trap listed twice";
    }
    std::set<VertexId> expected;
    for (const auto& [t, r] : reveal->expected) {
      if (!traps.contains(t) || !expected.insert(t).second || (r != 0 && r != 1)) {
        return "expected results not defined exactly on the traps";
      }
    }
    if (expected.size() != traps.size()) return "expected results not defined exactly on the traps";
    ++idx;
    if (idx >= msgs.size()) return "missing Bob's final message";
    const Envelope& final_env = msgs[idx];
    if (final_env.sender != Sender::kBob) return "expected Bob's final message";
    if (const auto* keys = std::get_if<SecretKeys>(&final_env.message)) {
      std::set<VertexId> seen;
      for (const auto& [v, sk] : keys->keys) {
        if (v >= n || !seen.insert(v).second) return "secret key for an unknown or repeated vertex";
      }
    } else if (!std::holds_alternative<Abort>(final_env.message)) {
      return "expected secret keys or an abort";
    }
    ++idx;
  }
  if (idx < msgs.size() && As<Dispute>(msgs[idx], Sender::kAlice) != nullptr) ++idx;
  if (idx != msgs.size()) return "messages after the end of the protocol";
  return std::nullopt;
}

bool ReplayCheck(const Transcript& transcript) {
  return !StructuralProblem(transcript).has_value();
}

Judgment Judge(const Transcript& transcript) {
  Judgment j;
  const auto pass = [&](Check c) { j.status[static_cast<std::size_t>(c)] = Status::kPass; };
  const auto fail = [&](Check c, Verdict v, std::string detail) {
    j.status[static_cast<std::size_t>(c)] = Status::kFail;
    j.verdict = v;
    j.failing = c;
    j.detail = std::move(detail);
    return j;
  };

  if (auto problem = StructuralProblem(transcript)) {
    return fail(Check::kStructure, Verdict::kInvalidTranscript, *problem);
  }
  pass(Check::kStructure);

  std::vector<const KeyAndResult*> rounds;
  const SecretKeys* keys = nullptr;
  const TrapReveal* reveal = nullptr;
  bool alice_aborted = false;
  for (const Envelope& env : transcript.messages) {
    if (const auto* m = std::get_if<KeyAndResult>(&env.message)) rounds.push_back(m);
    if (const auto* m = std::get_if<SecretKeys>(&env.message)) keys = m;
    if (const auto* m = std::get_if<TrapReveal>(&env.message)) reveal = m;
    if (env.sender == Sender::kAlice && std::holds_alternative<Abort>(env.message)) {
      alice_aborted = true;
    }
  }

  for (const KeyAndResult* r : rounds) {
    if (!ValidatePublicKey(r->pk)) {
      return fail(Check::kPublicKeys, Verdict::kBobWithheldOrCheated,
                  "invalid public key for vertex " + std::to_string(r->vertex));
    }
  }
  pass(Check::kPublicKeys);
  for (const KeyAndResult* r : rounds) {
    if (!ValidateCiphertext(r->pk, r->result.first) ||
        !ValidateCiphertext(r->pk, r->result.second)) {
      return fail(Check::kCiphertexts, Verdict::kBobWithheldOrCheated,
                  "invalid result ciphertext for vertex " + std::to_string(r->vertex));
    }
  }
  pass(Check::kCiphertexts);

  const std::size_t n = transcript.session.vertices;
  if (keys == nullptr) {
    return fail(Check::kKeysPresent, Verdict::kBobWithheldOrCheated,
                alice_aborted ? "Alice aborted the run" : "secret keys withheld");
  }
  std::vector<const SecretKey*> sk(n, nullptr);
  for (const auto& [v, key] : keys->keys) sk[v] = &key;
  for (VertexId v = 0; v < n; ++v) {
    if (sk[v] == nullptr) {
      return fail(Check::kKeysPresent, Verdict::kBobWithheldOrCheated,
                  "no secret key for vertex " + std::to_string(v));
    }
  }
  pass(Check::kKeysPresent);

  for (VertexId v = 0; v < n; ++v) {
    if (!ValidateKeyPair(rounds[v]->pk, *sk[v])) {
      return fail(Check::kKeypairs, Verdict::kBobWithheldOrCheated,
                  "secret key does not match the public key of vertex " + std::to_string(v));
    }
  }
  pass(Check::kKeypairs);

  std::vector<int> b(n);
  for (VertexId v = 0; v < n; ++v) {
    const KeyAndResult& r = *rounds[v];
    b[v] = Decrypt(*sk[v], r.result.first, r.pk);
    if ((b[v] ^ Decrypt(*sk[v], r.result.second, r.pk)) != 1) {
      return fail(Check::kComplement, Verdict::kBobWithheldOrCheated,
                  "result pair of vertex " + std::to_string(v) + " is not complementary");
    }
  }
  pass(Check::kComplement);

  for (const auto& [t, r] : reveal->expected) {
    if (b[t] != r) {
      return fail(Check::kTraps, Verdict::kBobWithheldOrCheated,
                  "trap " + std::to_string(t) + " mismatches");
    }
  }
  pass(Check::kTraps);
  j.verdict = Verdict::kAcceptedOutcome;
  return j;
}

std::string FormatReport(const Judgment& judgment) {
  std::ostringstream out;
  for (std::size_t c = 0; c < kNumChecks; ++c) {
    const Status s = judgment.status[c];
    out << "check " << CheckName(static_cast<Check>(c)) << ": "
        << (s == Status::kPass ? "pass" : s == Status::kFail ? "FAIL" : "skipped") << '\n';
  }
  out << "verdict: " << VerdictName(judgment.verdict);
  if (!judgment.detail.empty()) out << " (" << judgment.detail << ')';
  out << '\n';
  return out.str();
}

}  // namespace pvbqc::verifier
