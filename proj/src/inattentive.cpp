// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/inattentive.hpp"

#include <string>

#include "pvbqc/errors.hpp"

namespace pvbqc {

namespace {

Slot ComplementSlot(Slot s) {
  switch (s) {
    case Slot::kB: return Slot::kC;
    case Slot::kC: return Slot::kB;
    case Slot::kZero: return Slot::kOne;
    case Slot::kOne: return Slot::kZero;
  }
  return s;
}

const RoundKey& RoundAt(std::span<const RoundKey> rounds, std::size_t j) {
  if (j >= rounds.size()) {
    throw InvalidArgument("no bit ciphertext for round " + std::to_string(j));
  }
  return rounds[j];
}

const Level0& CheckRecipe(const Level0& leaf) {
  if (!leaf.recipe) throw InvalidArgument("leaf has no construction recipe");
  return leaf;
}

}  // namespace

LeafKind ComplementKind(LeafKind kind) {
  switch (kind) {
    case LeafKind::kConst0: return LeafKind::kConst1;
    case LeafKind::kConst1: return LeafKind::kConst0;
    case LeafKind::kVar: return LeafKind::kNegVar;
    case LeafKind::kNegVar: return LeafKind::kVar;
  }
  return kind;
}

int LeafValue(LeafKind kind, int b) {
  switch (kind) {
    case LeafKind::kConst0: return 0;
    case LeafKind::kConst1: return 1;
    case LeafKind::kVar: return b & 1;
    case LeafKind::kNegVar: return (b & 1) ^ 1;
  }
  return 0;
}

Level0Layout LeafTemplate(LeafKind kind) {
  using enum Slot;
  switch (kind) {
    case LeafKind::kConst0:
      return {{{kB, kZero}, {kC, kZero}, {kB, kB}, {kB, kB}}};
    case LeafKind::kConst1:
      return {{{kB, kZero}, {kC, kZero}, {kB, kC}, {kB, kC}}};
    case LeafKind::kVar:
      return {{{kB, kZero}, {kB, kZero}, {kB, kB}, {kB, kC}}};
    case LeafKind::kNegVar:
      return {{{kC, kZero}, {kC, kZero}, {kB, kB}, {kB, kC}}};
  }
  throw InvalidArgument("unknown leaf kind");
}

Level0Layout DrawLevel0Layout(LeafKind kind, RandomSource& rng) {
  Level0Layout layout = LeafTemplate(kind);
  for (auto& pair : layout) {
    if (rng.Bit()) {
      pair[0] = ComplementSlot(pair[0]);
      pair[1] = ComplementSlot(pair[1]);
    }
  }
  Shuffle(std::span(layout), rng);
  return layout;
}

Level0 MaterializeLevel0(const Level0Layout& layout, VertexId key_index,
                         const RoundKey& round, RandomSource& rng) {
  auto fill = [&](Slot s) {
    switch (s) {
      case Slot::kB: return Rerandomize(round.pk, round.result.first, rng);
      case Slot::kC: return Rerandomize(round.pk, round.result.second, rng);
      case Slot::kZero: return EncryptZero(round.pk, rng);
      case Slot::kOne: return EncryptOne(round.pk, rng);
    }
    throw InvalidArgument("unknown slot");
  };
  Level0 leaf;
  leaf.key_index = key_index;
  for (std::size_t i = 0; i < 4; ++i) {
    leaf.pairs[i].left = fill(layout[i][0]);
    leaf.pairs[i].right = fill(layout[i][1]);
  }
  return leaf;
}

Level0 EncodeLeaf(LeafKind kind, VertexId key_index, const RoundKey& round,
                  RandomSource& rng) {
  Level0 leaf = MaterializeLevel0(LeafTemplate(kind), key_index, round, rng);
  leaf.recipe = kind;
  return leaf;
}

Level1 EncodeParity(std::span<const VertexId> deps, int negate,
                    std::span<const RoundKey> rounds, std::size_t length,
                    RandomSource& rng) {
  if (length == 0) throw InvalidArgument("level-1 sequence must be non-empty");
  std::vector<bool> in_deps(length, false);
  for (VertexId j : deps) {
    if (j >= length) {
      throw InvalidArgument("dependency " + std::to_string(j) + " outside the sequence");
    }
    in_deps[j] = true;
  }
  Level1 seq;
  seq.entries.reserve(length);
  for (std::size_t j = 0; j < length; ++j) {
    LeafKind kind = in_deps[j] ? LeafKind::kVar : LeafKind::kConst0;
    if (j == 0 && (negate & 1)) kind = ComplementKind(kind);
    seq.entries.push_back(
        EncodeLeaf(kind, static_cast<VertexId>(j), RoundAt(rounds, j), rng));
  }
  return seq;
}

Level1 EncodeConstant(int value, std::span<const RoundKey> rounds, std::size_t length,
                      RandomSource& rng) {
  return EncodeParity({}, value, rounds, length, rng);
}

Level2 EncodeOr(const Level1& a, const Level1& b, std::span<const RoundKey> rounds,
                std::size_t length, RandomSource& rng) {
  if (a.entries.size() != length || b.entries.size() != length) {
    throw InvalidArgument("EncodeOr: operand length mismatch");
  }
  Level2 node;
  node.pairs[0] = {a, EncodeConstant(0, rounds, length, rng)};
  node.pairs[1] = {b, EncodeConstant(0, rounds, length, rng)};
  node.pairs[2] = {a, b};
  node.pairs[3] = {EncodeConstant(1, rounds, length, rng),
                   EncodeConstant(0, rounds, length, rng)};
  return node;
}

Level3 EncodeXor(const Level2& a, const Level2& b) {
  Level3 node;
  node.entries = {a, b};
  return node;
}

EncodedDelta EncodeDelta(const CompiledAngle& formulas,
                         std::span<const VertexId> x_deps,
                         std::span<const VertexId> z_deps,
                         std::span<const RoundKey> rounds, std::size_t length,
                         RandomSource& rng) {
  auto atom_tree = [&](Atom atom) {
    switch (atom) {
      case Atom::kZero: return EncodeConstant(0, rounds, length, rng);
      case Atom::kOne: return EncodeConstant(1, rounds, length, rng);
      case Atom::kParityX: return EncodeParity(x_deps, 0, rounds, length, rng);
      case Atom::kNotParityX: return EncodeParity(x_deps, 1, rounds, length, rng);
      case Atom::kParityZ: return EncodeParity(z_deps, 0, rounds, length, rng);
      case Atom::kNotParityZ: return EncodeParity(z_deps, 1, rounds, length, rng);
    }
    throw InvalidArgument("unknown atom");
  };
  EncodedDelta delta;
  for (std::size_t m = 0; m < 3; ++m) {
    const auto& atoms = formulas[m].atoms;
    Level2 left = EncodeOr(atom_tree(atoms[0]), atom_tree(atoms[1]), rounds, length, rng);
    Level2 right = EncodeOr(atom_tree(atoms[2]), atom_tree(atoms[3]), rounds, length, rng);
    delta.bits[m] = EncodeXor(left, right);
  }
  return delta;
}

Level0 RandomizeLevel0(const Level0& leaf, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng) {
  LeafKind kind = *CheckRecipe(leaf).recipe;
  if (flip & 1) kind = ComplementKind(kind);
  Level0 out = MaterializeLevel0(DrawLevel0Layout(kind, rng), leaf.key_index,
                                 RoundAt(rounds, leaf.key_index), rng);
  out.recipe = kind;
  return out;
}

Level1 RandomizeLevel1(const Level1& seq, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng) {
  const std::size_t n = seq.entries.size();
  if (n == 0) throw InvalidArgument("level-1 sequence must be non-empty");
  // Mask of parity `flip`: free bits on entries 1.., entry 0 fixes the parity.
  std::vector<int> mask(n, 0);
  int parity = flip & 1;
  for (std::size_t j = 1; j < n; ++j) {
    mask[j] = rng.Bit();
    parity ^= mask[j];
  }
  mask[0] = parity;
  Level1 out;
  out.entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.entries.push_back(RandomizeLevel0(seq.entries[j], mask[j], rounds, rng));
  }
  return out;
}

Level2 RandomizeLevel2(const Level2& node, int flip, std::span<const RoundKey> rounds,
                       RandomSource& rng) {
  // Complementing the node flips every pair value, i.e. one side per pair.
  Level2 out;
  for (std::size_t i = 0; i < 4; ++i) {
    const int left_flip = rng.Bit();
    const int right_flip = left_flip ^ (flip & 1);
    out.pairs[i][0] = RandomizeLevel1(node.pairs[i][0], left_flip, rounds, rng);
    out.pairs[i][1] = RandomizeLevel1(node.pairs[i][1], right_flip, rounds, rng);
  }
  Shuffle(std::span(out.pairs), rng);
  return out;
}

Level3 RandomizeLevel3(const Level3& node, std::span<const RoundKey> rounds,
                       RandomSource& rng) {
  const int flip = rng.Bit();  // even-weight mask over two entries: 00 or 11
  Level3 out;
  out.entries[0] = RandomizeLevel2(node.entries[0], flip, rounds, rng);
  out.entries[1] = RandomizeLevel2(node.entries[1], flip, rounds, rng);
  return out;
}

EncodedDelta Randomize(const EncodedDelta& delta, std::span<const RoundKey> rounds,
                       RandomSource& rng) {
  EncodedDelta out;
  for (std::size_t m = 0; m < 3; ++m) {
    out.bits[m] = RandomizeLevel3(delta.bits[m], rounds, rng);
  }
  return out;
}

int CountDifferingPairs(std::span<const KeyHolder> keys, const Level0& leaf) {
  if (leaf.key_index >= keys.size()) {
    throw MalformedEncoding("no secret key for round " + std::to_string(leaf.key_index));
  }
  const KeyHolder& holder = keys[leaf.key_index];
  int differing = 0;
  try {
    for (const CtPair& pair : leaf.pairs) {
      differing += Decrypt(holder.sk, pair.left, holder.pk) !=
                   Decrypt(holder.sk, pair.right, holder.pk);
    }
  } catch (const InvalidCiphertext& e) {
    throw MalformedEncoding(std::string("leaf holds an invalid ciphertext: ") + e.what());
  }
  return differing;
}

int EvalLevel0(std::span<const KeyHolder> keys, const Level0& leaf) {
  const int differing = CountDifferingPairs(keys, leaf);
  if (differing == 1) return 0;
  if (differing == 3) return 1;
  throw MalformedEncoding("level-0 node has " + std::to_string(differing) +
                          " differing pairs");
}

int EvalLevel1(std::span<const KeyHolder> keys, const Level1& seq) {
  if (seq.entries.empty()) throw MalformedEncoding("empty level-1 sequence");
  int value = 0;
  for (const Level0& leaf : seq.entries) value ^= EvalLevel0(keys, leaf);
  return value;
}

int EvalLevel2(std::span<const KeyHolder> keys, const Level2& node) {
  int differing = 0;
  for (const auto& pair : node.pairs) {
    differing += EvalLevel1(keys, pair[0]) != EvalLevel1(keys, pair[1]);
  }
  if (differing == 1) return 0;
  if (differing == 3) return 1;
  throw MalformedEncoding("level-2 node has " + std::to_string(differing) +
                          " differing pairs");
}

int EvalLevel3(std::span<const KeyHolder> keys, const Level3& node) {
  return EvalLevel2(keys, node.entries[0]) ^ EvalLevel2(keys, node.entries[1]);
}

AngleIndex EvalDelta(std::span<const KeyHolder> keys, const EncodedDelta& delta,
                     std::size_t expected_length) {
  for (const Level3& l3 : delta.bits) {
    for (const Level2& l2 : l3.entries) {
      for (const auto& pair : l2.pairs) {
        for (const Level1& l1 : pair) {
          if (l1.entries.size() != expected_length) {
            throw MalformedEncoding("level-1 sequence has the wrong length");
          }
          for (std::size_t j = 0; j < l1.entries.size(); ++j) {
            if (l1.entries[j].key_index != j) {
              throw MalformedEncoding("level-1 entry keyed to the wrong round");
            }
          }
        }
      }
    }
  }
  int k = 0;
  for (int m = 0; m < 3; ++m) k |= EvalLevel3(keys, delta.bits[m]) << m;
  return AngleIndex(k);
}

}  // namespace pvbqc
