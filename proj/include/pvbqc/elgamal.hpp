// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "pvbqc/bigint.hpp"
#include "pvbqc/modgroup.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc {

using VertexId = std::uint32_t;

struct PublicKey {
  GroupParams group;
  BigInt h;  // g^x

  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.group == b.group && a.h == b.h;
  }
};

struct SecretKey {
  BigInt x;  // in [0, p)

  friend bool operator==(const SecretKey& a, const SecretKey& b) {
    return a.x == b.x;
  }
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

// Bit ciphertext. The plaintext is g^m: identity for 0, any non-identity
// element for 1.
struct Ciphertext {
  BigInt u;  // g^m * h^r
  BigInt v;  // g^r

  friend bool operator==(const Ciphertext& a, const Ciphertext& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// (b*, c*) with c = 1 - b, both under the key of round `key_index`.
struct BitCiphertext {
  Ciphertext first;
  Ciphertext second;
  VertexId key_index = 0;
};

KeyPair KeyGen(const GroupParams& group, RandomSource& rng);
KeyPair KeyPairFromSecret(const GroupParams& group, const BigInt& x);

Ciphertext EncryptZeroWith(const PublicKey& pk, const BigInt& r);
Ciphertext EncryptOneWith(const PublicKey& pk, const BigInt& r, const BigInt& m);
Ciphertext EncryptZero(const PublicKey& pk, RandomSource& rng);
Ciphertext EncryptOne(const PublicKey& pk, RandomSource& rng);
Ciphertext Encrypt(const PublicKey& pk, int bit, RandomSource& rng);

// Throws InvalidCiphertext if either component is outside H.
int Decrypt(const SecretKey& sk, const Ciphertext& ct, const PublicKey& pk);

// (u^y h^z, v^y g^z); y in [1, p), z in [0, p).
Ciphertext RerandomizeWith(const PublicKey& pk, const Ciphertext& ct,
                           const BigInt& y, const BigInt& z);
Ciphertext Rerandomize(const PublicKey& pk, const Ciphertext& ct,
                       RandomSource& rng);

BitCiphertext EncryptBitPair(const PublicKey& pk, int bit, VertexId key_index,
                             RandomSource& rng);

// Validity checks on untrusted material. None of them throw.
bool ValidatePublicKey(const PublicKey& pk);
bool ValidateKeyPair(const PublicKey& pk, const SecretKey& sk);
bool ValidateCiphertext(const PublicKey& pk, const Ciphertext& ct);

}  // namespace pvbqc
