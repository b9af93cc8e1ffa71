// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "pvbqc/qsim/kernels.hpp"

namespace pvbqc::qsim::avx2 {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d Load2(const Amplitude* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void Store2(Amplitude* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// v * w for a broadcast complex scalar w = wr + i wi.
inline __m256d MulScalar(__m256d v, __m256d wr, __m256d wi) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);  // [im, re, ...]
  return _mm256_fmaddsub_pd(v, wr, _mm256_mul_pd(swapped, wi));
}

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double NormSquared(const Amplitude* amps, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a = Load2(amps + k);
    const __m256d b = Load2(amps + k + 2);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) sum += std::norm(amps[k]);
  return sum;
}

void NegateWhereAllSet(Amplitude* amps, std::size_t n, std::uint64_t mask) {
  const long long sign = static_cast<long long>(0x8000000000000000ULL);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const long long s0 = ((k & mask) == mask) ? sign : 0;
    const long long s1 = (((k + 1) & mask) == mask) ? sign : 0;
    if ((s0 | s1) == 0) continue;
    const __m256d flip = _mm256_castsi256_pd(_mm256_set_epi64x(s1, s1, s0, s0));
    Store2(amps + k, _mm256_xor_pd(Load2(amps + k), flip));
  }
  for (; k < n; ++k) {
    if ((k & mask) == mask) amps[k] = -amps[k];
  }
}

void PhaseWhereSet(Amplitude* amps, std::size_t n, unsigned qubit, Amplitude phase) {
  const std::size_t bit = std::size_t{1} << qubit;
  if (bit < 2 || n < 2 * bit) {
    ScalarKernels().phase_where_set(amps, n, qubit, phase);
    return;
  }
  const __m256d wr = _mm256_set1_pd(phase.real());
  const __m256d wi = _mm256_set1_pd(phase.imag());
  for (std::size_t base = bit; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; off += 2) {
      Amplitude* p = amps + base + off;
      Store2(p, MulScalar(Load2(p), wr, wi));
    }
  }
}

double PairWeight(const Amplitude* amps, std::size_t n, unsigned qubit, Amplitude w) {
  const std::size_t bit = std::size_t{1} << qubit;
  if (bit < 2 || n < 2 * bit) {
    return ScalarKernels().pair_weight(amps, n, qubit, w);
  }
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; off += 2) {
      const Amplitude* p = amps + base + off;
      const __m256d c = _mm256_add_pd(Load2(p), MulScalar(Load2(p + bit), wr, wi));
      acc = _mm256_fmadd_pd(c, c, acc);
    }
  }
  return HorizontalSum(acc);
}

void PairCollapse(Amplitude* amps, std::size_t n, unsigned qubit, Amplitude w,
                  double scale) {
  const std::size_t bit = std::size_t{1} << qubit;
  if (bit < 2 || n < 2 * bit) {
    ScalarKernels().pair_collapse(amps, n, qubit, w, scale);
    return;
  }
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  const __m256d cwr = _mm256_set1_pd(w.real());
  const __m256d cwi = _mm256_set1_pd(-w.imag());
  const __m256d s = _mm256_set1_pd(scale);
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; off += 2) {
      Amplitude* p = amps + base + off;
      const __m256d c =
          _mm256_mul_pd(s, _mm256_add_pd(Load2(p), MulScalar(Load2(p + bit), wr, wi)));
      Store2(p, c);
      Store2(p + bit, MulScalar(c, cwr, cwi));
    }
  }
}

}  // namespace

const KernelTable& Table() {
  static const KernelTable table{
      "avx2", NormSquared, NegateWhereAllSet, PhaseWhereSet, PairWeight, PairCollapse,
  };
  return table;
}

}  // namespace pvbqc::qsim::avx2
