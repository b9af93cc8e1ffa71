// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/elgamal.hpp"

#include "pvbqc/errors.hpp"

namespace pvbqc {

namespace {

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

}  // namespace

KeyPair KeyGen(const GroupParams& group, RandomSource& rng) {
  return KeyPairFromSecret(group, rng.BelowBig(group.p));
}

KeyPair KeyPairFromSecret(const GroupParams& group, const BigInt& x) {
  if (x < 0 || x >= group.p) throw InvalidArgument("secret key out of range");
  return KeyPair{PublicKey{group, PowMod(group.g, x, group.q)}, SecretKey{x}};
}

Ciphertext EncryptZeroWith(const PublicKey& pk, const BigInt& r) {
  const GroupParams& grp = pk.group;
  return Ciphertext{PowMod(pk.h, r, grp.q), PowMod(grp.g, r, grp.q)};
}

Ciphertext EncryptOneWith(const PublicKey& pk, const BigInt& r, const BigInt& m) {
  const GroupParams& grp = pk.group;
  if (m < 1 || m >= grp.p) throw InvalidArgument("EncryptOneWith: m must be in [1, p)");
  BigInt u = PowMod(grp.g, m, grp.q) * PowMod(pk.h, r, grp.q) % grp.q;
  return Ciphertext{std::move(u), PowMod(grp.g, r, grp.q)};
}

Ciphertext EncryptZero(const PublicKey& pk, RandomSource& rng) {
  return EncryptZeroWith(pk, rng.BelowBig(pk.group.p));
}

Ciphertext EncryptOne(const PublicKey& pk, RandomSource& rng) {
  BigInt r = rng.BelowBig(pk.group.p);
  BigInt m = rng.InRange(BigInt(1), pk.group.p);
  return EncryptOneWith(pk, r, m);
}

Ciphertext Encrypt(const PublicKey& pk, int bit, RandomSource& rng) {
  return bit ? EncryptOne(pk, rng) : EncryptZero(pk, rng);
}

int Decrypt(const SecretKey& sk, const Ciphertext& ct, const PublicKey& pk) {
  if (!ValidateCiphertext(pk, ct)) {
    throw InvalidCiphertext("ciphertext component outside the subgroup");
  }
  // u * (v^x)^-1 is the identity iff u == v^x.
  return PowMod(ct.v, sk.x, pk.group.q) == ct.u ? 0 : 1;
}

Ciphertext RerandomizeWith(const PublicKey& pk, const Ciphertext& ct,
                           const BigInt& y, const BigInt& z) {
  const GroupParams& grp = pk.group;
  if (y < 1 || y >= grp.p) throw InvalidArgument("RerandomizeWith: y must be in [1, p)");
  if (z < 0 || z >= grp.p) throw InvalidArgument("RerandomizeWith: z must be in [0, p)");
  BigInt u = PowMod(ct.u, y, grp.q) * PowMod(pk.h, z, grp.q) % grp.q;
  BigInt v = PowMod(ct.v, y, grp.q) * PowMod(grp.g, z, grp.q) % grp.q;
  return Ciphertext{std::move(u), std::move(v)};
}

Ciphertext Rerandomize(const PublicKey& pk, const Ciphertext& ct,
                       RandomSource& rng) {
  BigInt y = rng.InRange(BigInt(1), pk.group.p);
  BigInt z = rng.BelowBig(pk.group.p);
  return RerandomizeWith(pk, ct, y, z);
}

BitCiphertext EncryptBitPair(const PublicKey& pk, int bit, VertexId key_index,
                             RandomSource& rng) {
  BitCiphertext out;
  out.first = Encrypt(pk, bit, rng);
  out.second = Encrypt(pk, 1 - bit, rng);
  out.key_index = key_index;
  return out;
}

bool ValidatePublicKey(const PublicKey& pk) {
  return CheckGroupParams(pk.group) && InSubgroup(pk.group, pk.h);
}

bool ValidateKeyPair(const PublicKey& pk, const SecretKey& sk) {
  if (!ValidatePublicKey(pk)) return false;
  if (sk.x < 0 || sk.x >= pk.group.p) return false;
  return PowMod(pk.group.g, sk.x, pk.group.q) == pk.h;
}

bool ValidateCiphertext(const PublicKey& pk, const Ciphertext& ct) {
  return InSubgroup(pk.group, ct.u) && InSubgroup(pk.group, ct.v);
}

}  // namespace pvbqc
