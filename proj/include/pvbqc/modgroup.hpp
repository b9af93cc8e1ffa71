// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "pvbqc/bigint.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc {

// Order-p subgroup H of the integers modulo a safe prime q = 2p + 1,
// generated by g.
struct GroupParams {
  BigInt q;
  BigInt p;
  BigInt g;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.q == b.q && a.p == b.p && a.g == b.g;
  }
};

struct SafePrime {
  BigInt q;  // 2p + 1
  BigInt p;
};

// Miller-Rabin. Deterministic witness set below 2^64; above that, 40 rounds
// with bases drawn from a generator seeded by n itself, so the answer is a
// pure function of n with error probability below 2^-80.
bool IsPrime(const BigInt& n);

// base^exp mod modulus. modulus >= 2, exp >= 0.
BigInt ModExp(const BigInt& base, const BigInt& exp, const BigInt& modulus);

inline constexpr std::uint64_t kSafePrimeAttemptBudget = 1'000'000;

// Random safe prime with p of exactly `bits` bits (bits >= 3).
// Throws ResourceError when the attempt budget is exhausted.
SafePrime GenSafePrime(unsigned bits, RandomSource& rng,
                       std::uint64_t attempt_budget = kSafePrimeAttemptBudget);

// g = h^2 mod q, or nullopt when that is the identity.
std::optional<BigInt> GeneratorFromSeed(const BigInt& q, const BigInt& h);

// Draws h uniformly from [1, q) until h^2 mod q != 1.
BigInt FindGenerator(const BigInt& q, const BigInt& p, RandomSource& rng);

// Safe prime plus generator.
GroupParams GenGroup(unsigned bits, RandomSource& rng);

// Throws InvalidArgument unless q, p prime, q = 2p + 1, g in [2, q) and
// g^p = 1 (mod q).
GroupParams MakeGroupParams(BigInt q, BigInt p, BigInt g);

// Non-throwing form of the MakeGroupParams checks; safe on untrusted input.
bool CheckGroupParams(const GroupParams& group);

// x in [1, q) and x^p = 1 (mod q).
bool InSubgroup(const GroupParams& group, const BigInt& x);

}  // namespace pvbqc
