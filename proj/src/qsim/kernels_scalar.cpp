// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/qsim/kernels.hpp"

namespace pvbqc::qsim {

namespace {

double NormSquaredScalar(const Amplitude* amps, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += std::norm(amps[k]);
  return sum;
}

void NegateWhereAllSetScalar(Amplitude* amps, std::size_t n, std::uint64_t mask) {
  for (std::size_t k = 0; k < n; ++k) {
    if ((k & mask) == mask) amps[k] = -amps[k];
  }
}

void PhaseWhereSetScalar(Amplitude* amps, std::size_t n, unsigned qubit,
                         Amplitude phase) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t k = 0; k < n; ++k) {
    if (k & bit) amps[k] *= phase;
  }
}

double PairWeightScalar(const Amplitude* amps, std::size_t n, unsigned qubit,
                        Amplitude w) {
  const std::size_t bit = std::size_t{1} << qubit;
  double sum = 0.0;
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      const std::size_t k0 = base + off;
      sum += std::norm(amps[k0] + w * amps[k0 + bit]);
    }
  }
  return sum;
}

void PairCollapseScalar(Amplitude* amps, std::size_t n, unsigned qubit, Amplitude w,
                        double scale) {
  const std::size_t bit = std::size_t{1} << qubit;
  const Amplitude wc = std::conj(w);
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      const std::size_t k0 = base + off;
      const Amplitude c = scale * (amps[k0] + w * amps[k0 + bit]);
      amps[k0] = c;
      amps[k0 + bit] = wc * c;
    }
  }
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{
      "scalar",          NormSquaredScalar, NegateWhereAllSetScalar,
      PhaseWhereSetScalar, PairWeightScalar,  PairCollapseScalar,
  };
  return table;
}

}  // namespace pvbqc::qsim
