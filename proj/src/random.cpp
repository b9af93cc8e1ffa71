// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/random.hpp"

#include <vector>

#include "pvbqc/errors.hpp"

namespace pvbqc {

BigInt RandomSource::BelowBig(const BigInt& bound) {
  if (sgn(bound) <= 0) throw InvalidArgument("BelowBig: bound must be positive");
  if (mpz_fits_ulong_p(bound.get_mpz_t()) &&
      sizeof(unsigned long) >= sizeof(std::uint64_t)) {
    return BigInt(static_cast<unsigned long>(Below(bound.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  std::vector<std::uint64_t> buffer(words);
  BigInt candidate;
  while (true) {
    // Most significant word first.
    for (std::size_t i = 0; i < words; ++i) buffer[i] = NextWord();
    buffer[0] &= top_mask;
    mpz_import(candidate.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0,
               buffer.data());
    if (candidate < bound) return candidate;
  }
}

BigInt RandomSource::InRange(const BigInt& lo, const BigInt& hi) {
  if (hi <= lo) throw InvalidArgument("InRange: empty range");
  BigInt width = hi - lo;
  return lo + BelowBig(width);
}

double RandomSource::UniformDouble() {
  return static_cast<double>(NextWord() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededRng::Below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Below: bound must be positive");
  // Reject the top 2^64 mod bound words so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  while (true) {
    std::uint64_t word = engine_();
    if (word <= limit) return word % bound;
  }
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pvbqc
