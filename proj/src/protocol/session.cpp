// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/session.hpp"

#include <cstdio>

#include "pvbqc/errors.hpp"

namespace pvbqc::protocol {

namespace {

std::string SessionId(std::uint64_t seed) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "seed-%016llx", static_cast<unsigned long long>(seed));
  return buf;
}

}  // namespace

SessionResult RunSession(const SessionConfig& config) {
  const Pattern comp = NormalizePattern(config.computation);
  for (Role role : comp.graph.roles) {
    if (role != Role::kComputation) {
      throw InvalidArgument("the session pattern must hold computation vertices only");
    }
  }
  if (config.key_bits < 4) throw InvalidArgument("key bits must be at least 4");

  SeededRng alice_rng(DeriveSeed(config.seed, kAliceStream));
  SeededRng bob_rng(DeriveSeed(config.seed, kBobStream));
  SeededRng reference_rng(DeriveSeed(config.seed, kReferenceStream));
  SeededRng target_rng(DeriveSeed(config.seed, kTargetStream));

  Alice alice({comp, config.traps, config.dummy_degree}, alice_rng);
  const std::size_t n = alice.rounds();
  if (config.strategy.target && *config.strategy.target >= n) {
    throw InvalidArgument("strategy target is not a vertex");
  }
  Bob bob({config.strategy, config.key_bits, config.shared_group}, bob_rng, target_rng);

  SessionResult out;
  out.graph = alice.graph();
  out.traps = alice.traps();
  Transcript& t = out.transcript;
  t.session = {SessionId(config.seed), config.key_bits, n};

  const AnnounceGraph announce = alice.Announce();
  t.Append(Sender::kAlice, announce);
  const auto preps = alice.QuantumStates();
  bob.ReceiveQubits(qsim::StateVector::Prepare(preps, config.qubit_cap));
  bob.ReceiveAnnouncement(announce);
  out.target = bob.target();

  bool finished = false;
  for (std::size_t i = 0; i < n && !finished; ++i) {
    EncryptedAngle angle = alice.NextAngle();
    auto reply = bob.Round(angle);
    t.Append(Sender::kAlice, std::move(angle));
    if (auto* abort = std::get_if<Abort>(&reply)) {
      t.Append(Sender::kBob, *abort);
      out.verdict = alice.Finish(*abort);
      finished = true;
      break;
    }
    const auto& result = std::get<KeyAndResult>(reply);
    t.Append(Sender::kBob, result);
    if (auto abort = alice.ReceiveResult(result)) {
      t.Append(Sender::kAlice, *abort);
      out.verdict = alice.Finish(*abort);
      finished = true;
    }
  }
  if (!finished) {
    const TrapReveal reveal = alice.RevealTraps();
    t.Append(Sender::kAlice, reveal);
    Message final_message = std::visit([](auto&& m) -> Message { return m; }, bob.Reveal(reveal));
    out.bob_released_keys = std::holds_alternative<SecretKeys>(final_message);
    out.verdict = alice.Finish(final_message);
    t.Append(Sender::kBob, std::move(final_message));
  }
  if (config.free_rider) t.Append(Sender::kAlice, Dispute{"bob cheats"});

  out.secrets = alice.secrets();
  out.bob_measured = bob.measured();
  out.ground_truth = RunReferencePattern(comp, reference_rng);
  return out;
}

}  // namespace pvbqc::protocol
