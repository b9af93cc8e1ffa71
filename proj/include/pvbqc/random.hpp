// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "pvbqc/bigint.hpp"

namespace pvbqc {

// Source of uniform randomness injected into every probabilistic operation.
// All higher-level draws funnel through Below() so that tests can replace
// the source with an exhaustive enumerator.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform in [0, bound). bound must be positive.
  virtual std::uint64_t Below(std::uint64_t bound) = 0;

  // Uniform 64-bit word.
  virtual std::uint64_t NextWord() = 0;

  int Bit() { return static_cast<int>(Below(2)); }

  // Uniform in [0, bound) for arbitrary-precision bounds.
  BigInt BelowBig(const BigInt& bound);

  // Uniform in [lo, hi).
  BigInt InRange(const BigInt& lo, const BigInt& hi);

  // Uniform in [0, 1) with 53 bits of resolution.
  double UniformDouble();
};

// Deterministic, portable generator: mt19937_64 plus rejection sampling, so
// the same seed yields the same stream on every standard library.
class SeededRng final : public RandomSource {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t bound) override;
  std::uint64_t NextWord() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (master, stream); used to give each party and
// each Monte Carlo trial an independent seed.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// Fisher-Yates.
template <typename T, std::size_t N>
void Shuffle(std::span<T, N> items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.Below(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace pvbqc
