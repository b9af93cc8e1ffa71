// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/modgroup.hpp"

#include <array>
#include <string>

#include "pvbqc/errors.hpp"

namespace pvbqc {

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// First twelve primes: a complete witness set for n < 3.3 * 10^24.
constexpr std::array<unsigned, 12> kDeterministicWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr int kRandomRounds = 40;

// One Miller-Rabin round; n odd, n - 1 = d * 2^s.
bool PassesWitness(const BigInt& n, const BigInt& n_minus_1, const BigInt& d,
                   unsigned s, const BigInt& a) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool IsPrime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp)) return false;
  }
  // n is odd and has no factor below 100.
  if (n < 100 * 100) return true;

  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned w : kDeterministicWitnesses) {
      if (!PassesWitness(n, n_minus_1, d, s, BigInt(w))) return false;
    }
    return true;
  }

  SeededRng rng(DeriveSeed(mpz_getlimbn(n.get_mpz_t(), 0), 0x4d52));
  const BigInt upper = n - 2;  // bases in [2, n - 2]
  for (int round = 0; round < kRandomRounds; ++round) {
    BigInt a = rng.InRange(BigInt(2), upper + 1);
    if (!PassesWitness(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

BigInt ModExp(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus < 2) throw InvalidArgument("ModExp: modulus must be >= 2");
  if (sgn(exp) < 0) throw InvalidArgument("ModExp: negative exponent");
  BigInt result;
  mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return result;
}

SafePrime GenSafePrime(unsigned bits, RandomSource& rng,
                       std::uint64_t attempt_budget) {
  if (bits < 3) throw InvalidArgument("GenSafePrime: bits must be >= 3");
  const BigInt low = BigInt(1) << (bits - 1);
  for (std::uint64_t attempt = 0; attempt < attempt_budget; ++attempt) {
    // Top bit forced for the exact size, low bit forced for oddness.
    BigInt p = low + rng.BelowBig(low);
    mpz_setbit(p.get_mpz_t(), 0);
    BigInt q = 2 * p + 1;
    if (!IsPrime(p)) continue;
    if (!IsPrime(q)) continue;
    return SafePrime{std::move(q), std::move(p)};
  }
  throw ResourceError("no safe prime of " + std::to_string(bits) +
                      " bits found within the attempt budget");
}

std::optional<BigInt> GeneratorFromSeed(const BigInt& q, const BigInt& h) {
  BigInt g = h * h % q;
  if (g < 0) g += q;
  if (g == 1) return std::nullopt;
  return g;
}

BigInt FindGenerator(const BigInt& q, const BigInt& p, RandomSource& rng) {
  if (q != 2 * p + 1) throw InvalidArgument("FindGenerator: q != 2p + 1");
  while (true) {
    BigInt h = rng.InRange(BigInt(1), q);
    if (auto g = GeneratorFromSeed(q, h)) return *g;
  }
}

GroupParams GenGroup(unsigned bits, RandomSource& rng) {
  SafePrime sp = GenSafePrime(bits, rng);
  BigInt g = FindGenerator(sp.q, sp.p, rng);
  return GroupParams{std::move(sp.q), std::move(sp.p), std::move(g)};
}

bool CheckGroupParams(const GroupParams& group) {
  if (group.p < 2 || group.q != 2 * group.p + 1) return false;
  if (group.g < 2 || group.g >= group.q) return false;
  if (!IsPrime(group.p) || !IsPrime(group.q)) return false;
  return ModExp(group.g, group.p, group.q) == 1;
}

GroupParams MakeGroupParams(BigInt q, BigInt p, BigInt g) {
  GroupParams group{std::move(q), std::move(p), std::move(g)};
  if (!CheckGroupParams(group)) {
    throw InvalidArgument("group parameters violate the safe-prime subgroup invariants");
  }
  return group;
}

bool InSubgroup(const GroupParams& group, const BigInt& x) {
  if (x < 1 || x >= group.q) return false;
  return ModExp(x, group.p, group.q) == 1;
}

}  // namespace pvbqc
