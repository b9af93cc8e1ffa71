// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Inattentive evaluation of (a1 | a2) ^ (a3 | a4) over encrypted outcome bits.
//
// A bit is never encrypted directly. Its value is the number of "differing"
// ciphertext pairs in a multiset of four: one differing pair encodes 0,
// three encode 1, where a pair differs when its two plaintexts differ.
//
//   level 0  four ciphertext pairs built from one round's (b*, c*) and fresh
//            encryptions of 0; encodes 0, 1, b or !b.
//   level 1  one level-0 entry per earlier round; value = XOR of entries.
//   level 2  four pairs of level-1 values encoding x | y.
//   level 3  two level-2 entries; value = XOR.
//
// Alice builds trees from the received bit ciphertexts without knowing any
// plaintext. Bob, holding the secret keys, evaluates them.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pvbqc/angles.hpp"
#include "pvbqc/elgamal.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc {

enum class LeafKind : std::uint8_t { kConst0, kConst1, kVar, kNegVar };

LeafKind ComplementKind(LeafKind kind);

// Plaintext value the leaf template encodes for underlying bit b.
int LeafValue(LeafKind kind, int b);

struct CtPair {
  Ciphertext left;
  Ciphertext right;
};

struct Level0 {
  VertexId key_index = 0;
  std::array<CtPair, 4> pairs;
  // Construction recipe. Known to Alice only; never serialized.
  std::optional<LeafKind> recipe;
};

struct Level1 {
  std::vector<Level0> entries;
};

struct Level2 {
  std::array<std::array<Level1, 2>, 4> pairs;
};

struct Level3 {
  std::array<Level2, 2> entries;
};

// Three level-3 trees, one per bit of the angle index (bit 0 first).
struct EncodedDelta {
  std::array<Level3, 3> bits;
};

// Public material Alice holds for round j.
struct RoundKey {
  PublicKey pk;
  BitCiphertext result;
};

// Key material Bob holds for round j.
struct KeyHolder {
  PublicKey pk;
  SecretKey sk;
};

// Which ciphertext fills a slot of a level-0 layout.
enum class Slot : std::uint8_t {
  kB,     // re-randomized b*
  kC,     // re-randomized c*
  kZero,  // fresh 0*
  kOne,   // fresh 1*
};

using Level0Layout = std::array<std::array<Slot, 2>, 4>;

// The four templates:
//   0  = {(b*,0*), (c*,0*), (b*,b*), (b*,b*)}
//   1  = {(b*,0*), (c*,0*), (b*,c*), (b*,c*)}
//   b  = {(b*,0*), (b*,0*), (b*,b*), (b*,c*)}
//   !b = {(c*,0*), (c*,0*), (b*,b*), (b*,c*)}
Level0Layout LeafTemplate(LeafKind kind);

// Randomized layout for a leaf: each pair independently has both slots
// complemented or not (b* <-> c*, 0* <-> 1*), then the pairs are shuffled.
Level0Layout DrawLevel0Layout(LeafKind kind, RandomSource& rng);

// Fills a layout with fresh ciphertexts under `round`'s key.
Level0 MaterializeLevel0(const Level0Layout& layout, VertexId key_index,
                         const RoundKey& round, RandomSource& rng);

// --- Alice side: construction ----------------------------------------------

// Template in canonical order, every 0* fresh and every b*/c* use
// re-randomized independently.
Level0 EncodeLeaf(LeafKind kind, VertexId key_index, const RoundKey& round,
                  RandomSource& rng);

// Level-1 sequence over rounds [0, length): entry j is b_j if j is in
// `deps`, else 0. With `negate`, entry 0 uses the complementary template.
// Throws InvalidArgument if a dependency is out of range or a round is missing.
Level1 EncodeParity(std::span<const VertexId> deps, int negate,
                    std::span<const RoundKey> rounds, std::size_t length,
                    RandomSource& rng);

Level1 EncodeConstant(int value, std::span<const RoundKey> rounds, std::size_t length,
                      RandomSource& rng);

// {(a, 0), (b, 0), (a, b), (1, 0)}.
Level2 EncodeOr(const Level1& a, const Level1& b, std::span<const RoundKey> rounds,
                std::size_t length, RandomSource& rng);

Level3 EncodeXor(const Level2& a, const Level2& b);

// Builds the three trees for a compiled angle. Atoms over X_i, Z_i map to
// EncodeParity(x_deps / z_deps, negated?); constants to EncodeConstant.
EncodedDelta EncodeDelta(const CompiledAngle& formulas,
                         std::span<const VertexId> x_deps,
                         std::span<const VertexId> z_deps,
                         std::span<const RoundKey> rounds, std::size_t length,
                         RandomSource& rng);

// Re-randomizes a tree Alice built. Level 3 and level 1 entries receive a
// uniformly random even-weight flip mask, level 2 pairs receive random
// both-or-neither flips and a shuffle, and every leaf is rebuilt through
// DrawLevel0Layout / MaterializeLevel0. Flipping a subtree means rebuilding
// its leaves from complementary templates, so plaintext values are kept.
// Throws InvalidArgument if a leaf lacks its recipe.
EncodedDelta Randomize(const EncodedDelta& delta, std::span<const RoundKey> rounds,
                       RandomSource& rng);

Level0 RandomizeLevel0(const Level0& leaf, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng);
Level1 RandomizeLevel1(const Level1& seq, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng);
Level2 RandomizeLevel2(const Level2& node, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng);
Level3 RandomizeLevel3(const Level3& node, std::span<const RoundKey> rounds,
                       RandomSource& rng);

// --- Bob side: evaluation ---------------------------------------------------

// Number of pairs whose plaintexts differ.
int CountDifferingPairs(std::span<const KeyHolder> keys, const Level0& leaf);

// Throws MalformedEncoding unless exactly 1 or 3 pairs differ. Decryption
// failures and missing keys are reported as MalformedEncoding too.
int EvalLevel0(std::span<const KeyHolder> keys, const Level0& leaf);
int EvalLevel1(std::span<const KeyHolder> keys, const Level1& seq);
int EvalLevel2(std::span<const KeyHolder> keys, const Level2& node);
int EvalLevel3(std::span<const KeyHolder> keys, const Level3& node);

// Additionally checks every level-1 sequence has `expected_length` entries
// keyed 0, 1, ..., expected_length - 1.
AngleIndex EvalDelta(std::span<const KeyHolder> keys, const EncodedDelta& delta,
                     std::size_t expected_length);

// Calls f(const Level0&) for every leaf of the tree.
template <typename F>
void ForEachLeaf(const EncodedDelta& delta, F&& f) {
  for (const Level3& l3 : delta.bits) {
    for (const Level2& l2 : l3.entries) {
      for (const auto& pair : l2.pairs) {
        for (const Level1& l1 : pair) {
          for (const Level0& l0 : l1.entries) f(l0);
        }
      }
    }
  }
}

}  // namespace pvbqc
