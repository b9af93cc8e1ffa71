// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Amplitude kernels behind the statevector simulator.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2/FMA
// variant is compiled into its own translation unit and chosen at runtime
// when the CPU supports it. Setting PVBQC_SIMD=scalar forces the reference
// kernels. Amplitudes are interleaved (re, im) doubles, qubit q is bit q of
// the basis-state index.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace pvbqc::qsim {

using Amplitude = std::complex<double>;

struct KernelTable {
  const char* name;

  // Sum of |a_k|^2.
  double (*norm_squared)(const Amplitude* amps, std::size_t n);

  // a_k = -a_k for every k with (k & mask) == mask. Controlled-Z when mask
  // has two bits set.
  void (*negate_where_all_set)(Amplitude* amps, std::size_t n, std::uint64_t mask);

  // a_k *= phase for every k with bit `qubit` set.
  void (*phase_where_set)(Amplitude* amps, std::size_t n, unsigned qubit,
                          Amplitude phase);

  // Sum over pairs (a0, a1) split on `qubit` of |a0 + w a1|^2.
  double (*pair_weight)(const Amplitude* amps, std::size_t n, unsigned qubit,
                        Amplitude w);

  // a0' = s (a0 + w a1), a1' = conj(w) a0'. With w = +-e^{-i delta} and the
  // right scale this is the projection onto (|0> +- e^{i delta}|1>)/sqrt(2).
  void (*pair_collapse)(Amplitude* amps, std::size_t n, unsigned qubit, Amplitude w,
                        double scale);
};

const KernelTable& ScalarKernels();

// nullptr when not compiled in or not supported by this CPU.
const KernelTable* Avx2Kernels();

// Kernels chosen for this process (see file comment).
const KernelTable& ActiveKernels();

}  // namespace pvbqc::qsim
