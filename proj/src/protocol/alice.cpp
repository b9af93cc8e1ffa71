// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/alice.hpp"

#include <algorithm>

#include "pvbqc/angles.hpp"
#include "pvbqc/errors.hpp"

namespace pvbqc::protocol {

namespace {

int ParityOf(std::span<const VertexId> deps, const std::vector<int>& bits) {
  int parity = 0;
  for (VertexId j : deps) parity ^= bits[j];
  return parity;
}

}  // namespace

std::string_view VerdictReasonName(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::kAccepted: return "accepted";
    case VerdictReason::kInvalidPublicKey: return "invalid-public-key";
    case VerdictReason::kInvalidCiphertext: return "invalid-ciphertext";
    case VerdictReason::kUnexpectedMessage: return "unexpected-message";
    case VerdictReason::kKeysWithheld: return "keys-withheld";
    case VerdictReason::kInvalidKeypair: return "invalid-keypair";
    case VerdictReason::kComplementViolation: return "complement-violation";
    case VerdictReason::kTrapMismatch: return "trap-mismatch";
  }
  return "?";
}

Alice::Alice(const AliceConfig& config, RandomSource& rng) : rng_(rng) {
  const Pattern& comp = config.computation;
  if (comp.phi.size() != comp.graph.size()) {
    throw InvalidArgument("pattern needs one angle per vertex");
  }
  TrapPlacement placed = PlaceTraps(comp.graph, config.traps, config.dummy_degree, rng_);
  graph_ = std::move(placed.graph);
  std::vector<AngleIndex> phi(graph_.size());
  for (std::size_t c = 0; c < placed.comp_id.size(); ++c) phi[placed.comp_id[c]] = comp.phi[c];
  secrets_ = DrawSecrets(graph_, phi, rng_);
  deps_ = DeriveDependencies(graph_);
}

AnnounceGraph Alice::Announce() const { return {graph_.size(), graph_.edges}; }

std::vector<qsim::QubitPrep> Alice::QuantumStates() const {
  return PrepareStates(graph_, secrets_);
}

EncryptedAngle Alice::NextAngle() {
  const auto i = static_cast<VertexId>(rounds_.size());
  if (i >= graph_.size()) throw ProtocolError("no rounds left");
  const AngleIndex phi = secrets_.phi[i];
  const AngleIndex theta = secrets_.theta[i];
  const int r = secrets_.r[i];
  if (i == 0) return {0, DeltaPlain(phi, theta, r, 0, 0, 0, 0)};
  const int rx = ParityOf(deps_.x[i], secrets_.r);
  const int rz = ParityOf(deps_.z[i], secrets_.r);
  const CompiledAngle formulas = CompileBits(phi, theta, r, rx, rz);
  EncodedDelta delta = EncodeDelta(formulas, deps_.x[i], deps_.z[i], rounds_, i, rng_);
  delta = Randomize(delta, rounds_, rng_);
  StripRecipes(delta);
  return {i, std::move(delta)};
}

std::optional<Abort> Alice::ReceiveResult(const KeyAndResult& message) {
  const auto fail = [&](VerdictReason reason) {
    failure_ = reason;
    return Abort{std::string(VerdictReasonName(reason))};
  };
  if (failure_) return fail(*failure_);
  if (message.vertex != rounds_.size() || message.result.key_index != message.vertex) {
    return fail(VerdictReason::kUnexpectedMessage);
  }
  if (!ValidatePublicKey(message.pk)) return fail(VerdictReason::kInvalidPublicKey);
  if (!ValidateCiphertext(message.pk, message.result.first) ||
      !ValidateCiphertext(message.pk, message.result.second)) {
    return fail(VerdictReason::kInvalidCiphertext);
  }
  rounds_.push_back({message.pk, message.result});
  return std::nullopt;
}

TrapReveal Alice::RevealTraps() const {
  TrapReveal reveal;
  reveal.traps = traps();
  for (VertexId t : reveal.traps) reveal.expected.emplace_back(t, secrets_.r[t]);
  return reveal;
}

AliceVerdict Alice::Finish(const Message& bob_final) {
  if (failure_) return Reject(*failure_);
  if (std::holds_alternative<Abort>(bob_final)) return Reject(VerdictReason::kKeysWithheld);
  const auto* keys = std::get_if<SecretKeys>(&bob_final);
  const std::size_t n = graph_.size();
  if (keys == nullptr || rounds_.size() != n) return Reject(VerdictReason::kUnexpectedMessage);

  std::vector<const SecretKey*> sk(n, nullptr);
  for (const auto& [v, key] : keys->keys) {
    if (v >= n || sk[v] != nullptr) return Reject(VerdictReason::kUnexpectedMessage);
    sk[v] = &key;
  }
  if (std::count(sk.begin(), sk.end(), nullptr) != 0) {
    return Reject(VerdictReason::kKeysWithheld);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!ValidateKeyPair(rounds_[v].pk, *sk[v])) return Reject(VerdictReason::kInvalidKeypair);
  }
  std::vector<int> b(n);
  for (VertexId v = 0; v < n; ++v) {
    const RoundKey& round = rounds_[v];
    b[v] = Decrypt(*sk[v], round.result.first, round.pk);
    if ((b[v] ^ Decrypt(*sk[v], round.result.second, round.pk)) != 1) {
      return Reject(VerdictReason::kComplementViolation);
    }
  }
  for (VertexId t : traps()) {
    if (b[t] != secrets_.r[t]) return Reject(VerdictReason::kTrapMismatch);
  }
  return {true, DecodeOutput(graph_, b, secrets_.r), VerdictReason::kAccepted};
}

}  // namespace pvbqc::protocol
