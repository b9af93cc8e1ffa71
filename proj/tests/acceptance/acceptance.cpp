// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "exhaustive_rng.hpp"
#include "oracles.hpp"
#include "pvbqc/angles.hpp"
#include "pvbqc/elgamal.hpp"
#include "pvbqc/errors.hpp"
#include "pvbqc/experiment.hpp"
#include "pvbqc/inattentive.hpp"
#include "pvbqc/modgroup.hpp"
#include "pvbqc/protocol/session.hpp"
#include "pvbqc/protocol/transcript_json.hpp"
#include "pvbqc/verifier.hpp"
#include "tiny_rounds.hpp"

namespace pvbqc {
namespace {

using protocol::BobStrategy;
using protocol::RunSession;
using protocol::SessionConfig;
using protocol::SessionResult;
using testing::ExhaustiveRng;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// 1. Compiled formulas against the feed-forward rule, every parameter combination.
Outcome CompileSweep() {
  const auto start = Clock::now();
  long evaluations = 0;
  long mismatches = 0;
  for (int phi = 0; phi < 8; ++phi) {
    for (int theta = 0; theta < 8; ++theta) {
      for (int r = 0; r < 2; ++r) {
        for (int rx = 0; rx < 2; ++rx) {
          for (int rz = 0; rz < 2; ++rz) {
            const CompiledAngle c = CompileBits(AngleIndex(phi), AngleIndex(theta), r, rx, rz);
            for (int bx = 0; bx < 2; ++bx) {
              for (int bz = 0; bz < 2; ++bz) {
                int k = 0;
                for (int m = 0; m < 3; ++m) k |= c[m].Evaluate(bx, bz) << m;
                ++evaluations;
                mismatches += k != testing::DeltaOracle(phi, theta, r, bx, rx, bz, rz);
              }
            }
          }
        }
      }
    }
  }
  const double s = Seconds(start);
  return {mismatches == 0 && evaluations == 2048 && s < 1.0,
          Format("%ld evaluations over (phi, theta, r, rX, rZ, bX, bZ), %ld mismatches, %.3f s",
                 evaluations, mismatches, s)};
}

// 2. Every atom combination through encode, randomize and evaluate on q = 23.
Outcome HomomorphicSweep() {
  const auto start = Clock::now();
  std::vector<BitFormula> formulas;
  for (Atom a : kAllAtoms) {
    for (Atom b : kAllAtoms) {
      for (Atom c : kAllAtoms) {
        for (Atom d : kAllAtoms) formulas.push_back({{a, b, c, d}});
      }
    }
  }
  // Independent truth table: atom value from the raw bits.
  const auto atom = [](Atom a, int px, int pz) {
    const int table[6] = {0, 1, px, 1 - px, pz, 1 - pz};
    return table[static_cast<int>(a)];
  };
  const VertexId x[] = {0, 1};
  const VertexId z[] = {1, 2};
  SeededRng rng(2023);
  long checked = 0;
  long mismatches = 0;
  long errors = 0;
  for (int assignment = 0; assignment < 8; ++assignment) {
    const int bits[] = {assignment & 1, (assignment >> 1) & 1, (assignment >> 2) & 1};
    const int px = bits[0] ^ bits[1];
    const int pz = bits[1] ^ bits[2];
    const testing::Rounds rounds = testing::MakeRounds(testing::kTinyGroup, bits, rng);
    for (std::size_t f = 0; f < formulas.size(); f += 3) {
      const CompiledAngle c = {formulas[f], formulas[f + 1], formulas[f + 2]};
      try {
        const EncodedDelta d =
            Randomize(EncodeDelta(c, x, z, rounds.alice, 3, rng), rounds.alice, rng);
        const AngleIndex k = EvalDelta(rounds.bob, d, 3);
        for (int m = 0; m < 3; ++m) {
          const auto& at = c[m].atoms;
          const int want = (atom(at[0], px, pz) | atom(at[1], px, pz)) ^
                           (atom(at[2], px, pz) | atom(at[3], px, pz));
          ++checked;
          mismatches += k.bit(m) != want;
        }
      } catch (const Error&) {
        ++errors;
      }
    }
  }
  const double s = Seconds(start);
  return {mismatches == 0 && errors == 0 && checked == 1296 * 8 && s < 60.0,
          Format("%zu formulas x 8 assignments, %ld formula values, %ld mismatches, "
                 "%ld evaluation errors, %.1f s",
                 formulas.size(), checked, mismatches, errors, s)};
}

// 3. Trap outcomes in full honest sessions over every (theta_t, r_t, d).
Outcome TrapDeterminism() {
  SeededRng pattern_rng(3);
  SessionConfig c;
  c.computation = DeterministicPath(2, pattern_rng);
  c.key_bits = 8;
  std::set<std::tuple<int, int, int>> covered;
  long runs = 0;
  long wrong = 0;
  long rejected = 0;
  for (std::uint64_t seed = 1; seed <= 5000 && (covered.size() < 32 || runs < 320); ++seed) {
    c.seed = seed;
    const SessionResult r = RunSession(c);
    const VertexId t = r.traps.at(0);
    const VertexId d = r.graph.VerticesWithRole(Role::kDummy).at(0);
    covered.insert({r.secrets.theta[t].value(), r.secrets.r[t], r.secrets.d[d]});
    ++runs;
    wrong += r.bob_measured[t] != r.secrets.r[t];
    rejected += !r.verdict.accepted;
  }
  return {covered.size() == 32 && wrong == 0 && rejected == 0,
          Format("%zu of 32 (theta_t, r_t, d) combinations covered in %ld sessions, "
                 "%ld trap mismatches, %ld rejections",
                 covered.size(), runs, wrong, rejected)};
}

// 4. Honest sessions on deterministic paths decode to the reference outcome.
Outcome EndToEnd() {
  long sessions = 0;
  long failures = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      SeededRng pattern_rng(DeriveSeed(seed, 1000 + n));
      SessionConfig c;
      c.computation = DeterministicPath(n, pattern_rng);
      c.key_bits = 16;
      c.seed = seed;
      const SessionResult r = RunSession(c);
      ++sessions;
      failures += !(r.verdict.accepted && r.verdict.outcome == r.ground_truth);
    }
  }
  return {failures == 0,
          Format("paths of 4..8 vertices x 100 seeds: %ld sessions, %ld not accepted with the "
                 "reference outcome",
                 sessions, failures)};
}

// 5. Third-party judgment versus Alice over the scenario matrix.
Outcome Agreement() {
  struct Scenario {
    const char* name;
    BobStrategy strategy;
    bool free_rider;
  };
  const Scenario scenarios[] = {
      {"honest", BobStrategy::Honest(), false},
      {"flip-result", BobStrategy::FlipResult(), false},
      {"offset-angle", BobStrategy::OffsetAngle(), false},
      {"z-before-measure", BobStrategy::ZBeforeMeasure(), false},
      {"fake-secret-key", BobStrategy::FakeSecretKey(), false},
      {"malformed-pair", BobStrategy::MalformedPair(), false},
      {"withhold-keys", BobStrategy::WithholdKeys(), false},
      {"free-rider", BobStrategy::Honest(), true},
  };
  SeededRng pattern_rng(5);
  const Pattern pattern = DeterministicPath(3, pattern_rng);
  long sessions = 0;
  long disagreements = 0;
  long free_rider_accepted = 0;
  long free_rider_runs = 0;
  std::string per;
  for (const Scenario& s : scenarios) {
    long accepted = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      SessionConfig c;
      c.computation = pattern;
      c.key_bits = 16;
      c.seed = DeriveSeed(seed, 55);
      c.strategy = s.strategy;
      if (s.strategy.kind == BobStrategy::Kind::kMalformedPair) c.strategy.malformed_bit = seed & 1;
      c.free_rider = s.free_rider;
      const SessionResult r = RunSession(c);
      const auto bytes = protocol::SerializeTranscript(r.transcript);
      const auto j = verifier::Judge(protocol::ParseTranscript(bytes));
      const bool judged = j.verdict == verifier::Verdict::kAcceptedOutcome;
      ++sessions;
      disagreements += judged != r.verdict.accepted;
      accepted += r.verdict.accepted;
      if (s.free_rider) {
        ++free_rider_runs;
        free_rider_accepted += judged;
      }
    }
    per += Format(" %s:%ld", s.name, accepted);
  }
  return {disagreements == 0 && free_rider_accepted == free_rider_runs,
          Format("%ld sessions, %ld disagreements, free rider judged accepted %ld/%ld; "
                 "accepted per scenario:",
                 sessions, disagreements, free_rider_accepted, free_rider_runs) +
              per};
}

// 6. Detection rates: result flips on one of six vertices, forged keys.
Outcome DetectionRates() {
  SeededRng pattern_rng(6);
  SessionConfig c;
  c.computation = DeterministicPath(4, pattern_rng);
  c.key_bits = 16;
  c.seed = 6;
  c.strategy = BobStrategy::FlipResult();
  const experiment::Stats flip = experiment::Estimate(c, 2000, 1);
  c.strategy = BobStrategy::FakeSecretKey();
  const experiment::Stats fake = experiment::Estimate(c, 2000, 1);
  const experiment::Interval w = flip.interval();
  const bool flip_ok = w.Contains(1.0 / 6.0);
  const bool fake_ok = fake.detections == fake.trials;
  return {flip_ok && fake_ok,
          Format("flip-result %llu/%llu = %.4f, Wilson [%.4f, %.4f] %s 1/6; "
                 "fake-secret-key %llu/%llu = %.4f",
                 static_cast<unsigned long long>(flip.detections),
                 static_cast<unsigned long long>(flip.trials), flip.rate(), w.low, w.high,
                 flip_ok ? "contains" : "misses", static_cast<unsigned long long>(fake.detections),
                 static_cast<unsigned long long>(fake.trials), fake.rate())};
}

// 7. Leaves built on a both-zero result pair are identically distributed.
int SlotClass(Slot slot, int malformed_bit) {
  return slot == Slot::kOne ? 1 : slot == Slot::kZero ? 0 : malformed_bit;
}

using Ciphertexts = std::map<std::pair<unsigned long, unsigned long>, mpq_class>;

Ciphertexts Enumerate(const std::function<Ciphertext(RandomSource&)>& draw) {
  Ciphertexts dist;
  ExhaustiveRng rng;
  do {
    const Ciphertext ct = draw(rng);
    dist[{ct.u.get_ui(), ct.v.get_ui()}] += rng.Weight();
  } while (rng.Advance());
  return dist;
}

Outcome Neutralization() {
  const GroupParams& group = testing::kTinierGroup;  // q = 11
  const KeyPair kp = KeyPairFromSecret(group, 3);
  const int bit = 0;
  constexpr LeafKind kinds[] = {LeafKind::kConst0, LeafKind::kConst1, LeafKind::kVar,
                                LeafKind::kNegVar};
  // (a) plaintext multisets of the templates.
  std::set<std::vector<std::pair<int, int>>> multisets;
  for (LeafKind kind : kinds) {
    std::vector<std::pair<int, int>> m;
    for (const auto& pair : LeafTemplate(kind)) {
      m.emplace_back(SlotClass(pair[0], bit), SlotClass(pair[1], bit));
    }
    std::sort(m.begin(), m.end());
    multisets.insert(m);
  }
  // (b) law of the randomized layout, projected to plaintext classes.
  std::set<std::map<std::array<std::array<int, 2>, 4>, mpq_class>> layouts;
  long leaves = 0;
  for (LeafKind kind : kinds) {
    std::map<std::array<std::array<int, 2>, 4>, mpq_class> dist;
    ExhaustiveRng rng;
    do {
      const Level0Layout layout = DrawLevel0Layout(kind, rng);
      std::array<std::array<int, 2>, 4> classes;
      for (int i = 0; i < 4; ++i) {
        for (int s = 0; s < 2; ++s) classes[i][s] = SlotClass(layout[i][s], bit);
      }
      dist[classes] += rng.Weight();
    } while (rng.Advance());
    leaves += static_cast<long>(rng.leaves());
    layouts.insert(dist);
  }
  // (c) every slot is filled independently; its law depends only on its class.
  const Ciphertexts fresh_zero = Enumerate([&](RandomSource& r) { return EncryptZero(kp.pk, r); });
  const Ciphertexts fresh_one = Enumerate([&](RandomSource& r) { return EncryptOne(kp.pk, r); });
  bool slots_ok = true;
  for (const auto& [ct, w] : fresh_zero) {
    const Ciphertext sent{BigInt(ct.first), BigInt(ct.second)};
    slots_ok &= Enumerate([&](RandomSource& r) { return Rerandomize(kp.pk, sent, r); }) == fresh_zero;
  }
  const bool ok = multisets.size() == 1 && layouts.size() == 1 && slots_ok;
  return {ok, Format("q = 11, both-zero pair: %zu distinct plaintext multiset(s), %zu distinct "
                     "layout law(s) over %ld enumerated layouts, rerandomized slots %s fresh "
                     "zero encryptions (%zu ciphertexts), %zu one encryptions",
                     multisets.size(), layouts.size(), leaves,
                     slots_ok ? "equal" : "differ from", fresh_zero.size(), fresh_one.size())};
}

// 8. Rerandomization against fresh encryption on q = 23, from every source.
Outcome Rerandomization() {
  const KeyPair kp = KeyPairFromSecret(testing::kTinyGroup, 7);
  const Ciphertexts zero = Enumerate([&](RandomSource& r) { return EncryptZero(kp.pk, r); });
  const Ciphertexts one = Enumerate([&](RandomSource& r) { return EncryptOne(kp.pk, r); });
  long sources = 0;
  long differing = 0;
  for (const Ciphertexts* cls : {&zero, &one}) {
    for (const auto& [ct, w] : *cls) {
      const Ciphertext src{BigInt(ct.first), BigInt(ct.second)};
      ++sources;
      differing += Enumerate([&](RandomSource& r) { return Rerandomize(kp.pk, src, r); }) != *cls;
    }
  }
  return {differing == 0 && zero.size() == 11 && one.size() == 110,
          Format("%ld source ciphertexts (%zu zero, %zu one), %ld rerandomized laws differing "
                 "from fresh encryption",
                 sources, zero.size(), one.size(), differing)};
}

// 9. Invalid key corpus.
Outcome KeyValidation() {
  SeededRng rng(9);
  std::map<std::string, std::pair<long, long>> classes;  // cases, rejected
  const auto record = [&](const char* name, bool accepted) {
    auto& [cases, rejected] = classes[name];
    ++cases;
    rejected += !accepted;
  };
  std::vector<GroupParams> groups;
  for (unsigned bits : {8u, 10u, 12u, 16u}) {
    for (int i = 0; i < 4; ++i) groups.push_back(GenGroup(bits, rng));
  }
  // Composite moduli: odd composites n, with p = (n - 1) / 2 and g = 4.
  for (std::uint64_t n = 9; classes["composite q"].first < 60; n += 2) {
    if (testing::TrialDivisionPrime(n)) continue;
    const GroupParams g{BigInt(n), BigInt((n - 1) / 2), BigInt(4)};
    record("composite q", ValidatePublicKey({g, BigInt(16 % n)}));
  }
  for (const GroupParams& g : groups) {
    const std::uint64_t q = g.q.get_ui();
    const std::uint64_t p = g.p.get_ui();
    // Elements whose order is not p: brute-forced.
    int picked = 0;
    for (std::uint64_t a = 0; a < q && picked < 4; ++a) {
      std::uint64_t order = 0;
      if (a != 0) {
        std::uint64_t x = a % q;
        order = 1;
        while (x != 1) x = x * a % q, ++order;
      }
      if (order == p) continue;
      ++picked;
      record("wrong-order g", ValidatePublicKey({{g.q, g.p, BigInt(a)}, g.g}));
    }
    // Public values outside the order-p subgroup.
    for (int i = 0; i < 4; ++i) {
      const BigInt x = rng.BelowBig(g.p);
      const BigInt h = ModExp(g.g, x, g.q);
      const BigInt outside[] = {g.q - h, BigInt(0), g.q + h, g.q - 1};
      record("h not in H", ValidatePublicKey({g, outside[i]}));
    }
    // Secret keys that do not match.
    for (int i = 0; i < 4; ++i) {
      const KeyPair kp = KeyGen(g, rng);
      const BigInt wrong[] = {(kp.sk.x + 1 + i) % g.p, kp.sk.x + g.p, g.p - 1 - kp.sk.x, -1 - kp.sk.x};
      SecretKey sk{wrong[i]};
      if (sk.x == kp.sk.x) sk.x = (sk.x + 1) % g.p;
      record("sk mismatch", ValidateKeyPair(kp.pk, sk));
    }
  }
  bool ok = true;
  std::string summary;
  for (const auto& [name, counts] : classes) {
    ok &= counts.first >= 50 && counts.first == counts.second;
    summary += Format(" %s %ld/%ld;", name.c_str(), counts.second, counts.first);
  }
  return {ok && classes.size() == 4, "rejected:" + summary};
}

// 10. Timing of a 10-qubit session and its judgment.
Outcome Performance() {
  SeededRng pattern_rng(10);
  SessionConfig c;
  c.computation = DeterministicPath(8, pattern_rng);
  c.key_bits = 32;
  c.seed = 10;
  const auto start = Clock::now();
  const SessionResult r = RunSession(c);
  const double session_s = Seconds(start);
  const std::string bytes = protocol::SerializeTranscript(r.transcript);
  const auto judge_start = Clock::now();
  const auto j = verifier::Judge(protocol::ParseTranscript(bytes));
  const double judge_s = Seconds(judge_start);
  const bool ok = r.graph.size() == 10 && r.verdict.accepted &&
                  j.verdict == verifier::Verdict::kAcceptedOutcome && session_s < 10.0 &&
                  judge_s < 1.0;
  return {ok, Format("%zu qubits, 32-bit keys: session %.2f s, parse and judge %.3f s "
                     "(transcript %zu bytes)",
                     r.graph.size(), session_s, judge_s, bytes.size())};
}

}  // namespace
}  // namespace pvbqc

int main() {
  using pvbqc::Outcome;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"compile soundness", pvbqc::CompileSweep},
      {"homomorphic evaluation", pvbqc::HomomorphicSweep},
      {"trap determinism", pvbqc::TrapDeterminism},
      {"end-to-end correctness", pvbqc::EndToEnd},
      {"verifier agreement", pvbqc::Agreement},
      {"detection rates", pvbqc::DetectionRates},
      {"ill-formed pair neutralization", pvbqc::Neutralization},
      {"rerandomization", pvbqc::Rerandomization},
      {"key validation", pvbqc::KeyValidation},
      {"performance", pvbqc::Performance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", index, o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
