// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "pvbqc/elgamal.hpp"
#include "pvbqc/inattentive.hpp"

namespace pvbqc::testing {

// Per-round keys and honest result pairs for the bits b_0, b_1, ...
struct Rounds {
  std::vector<RoundKey> alice;  // public side
  std::vector<KeyHolder> bob;   // key holder side
};

inline Rounds MakeRounds(const GroupParams& group, std::span<const int> bits,
                         RandomSource& rng) {
  Rounds out;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const KeyPair kp = KeyGen(group, rng);
    out.alice.push_back({kp.pk, EncryptBitPair(kp.pk, bits[j], static_cast<VertexId>(j), rng)});
    out.bob.push_back({kp.pk, kp.sk});
  }
  return out;
}

inline const GroupParams kTinyGroup{23, 11, 2};
inline const GroupParams kTinierGroup{11, 5, 4};

}  // namespace pvbqc::testing
