// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pvbqc/angles.hpp"
#include "pvbqc/qsim/kernels.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc::qsim {

inline constexpr std::size_t kDefaultQubitCap = 22;

// Probabilities within this distance of 0 or 1 are snapped before sampling.
inline constexpr double kProbabilitySnap = 1e-9;

// Single-qubit preparation request.
struct QubitPrep {
  enum class Kind { kPlus, kBasis };

  Kind kind = Kind::kPlus;
  AngleIndex angle;  // kPlus: (|0> + e^{i angle}|1>)/sqrt(2)
  int bit = 0;       // kBasis: |bit>

  static QubitPrep PlusTheta(AngleIndex theta) { return {Kind::kPlus, theta, 0}; }
  // Z^z |+_theta> = |+_{theta + z pi}>.
  static QubitPrep PlusThetaWithZ(AngleIndex theta, int z) {
    return {Kind::kPlus, theta + AngleIndex(4 * (z & 1)), 0};
  }
  static QubitPrep Dummy(int d) { return {Kind::kBasis, AngleIndex(), d & 1}; }

  friend bool operator==(const QubitPrep&, const QubitPrep&) = default;
};

// e^{i k pi/4} with exact constants.
Amplitude Phase(AngleIndex angle);

// Dense statevector. Measured qubits stay in the register (projected) and
// are marked dead.
class StateVector {
 public:
  // Tensor product of the requested states; qubit q is specs[q].
  // Throws ResourceError beyond `qubit_cap`.
  static StateVector Prepare(std::span<const QubitPrep> specs,
                             std::size_t qubit_cap = kDefaultQubitCap,
                             const KernelTable& kernels = ActiveKernels());

  std::size_t num_qubits() const { return num_qubits_; }
  bool alive(std::size_t qubit) const;
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const KernelTable& kernels() const { return *kernels_; }

  double NormSquared() const;

  void ApplyCz(std::size_t a, std::size_t b);
  void ApplyZ(std::size_t qubit);

  // Probability of outcome 0 when measuring `qubit` in the basis
  // |+-_delta> = (|0> +- e^{i delta}|1>)/sqrt(2). Outcome 0 is |+_delta>.
  double ProbabilityXY(std::size_t qubit, AngleIndex delta) const;

  // Projects onto the given outcome, renormalizes and marks the qubit dead.
  // Returns the probability the outcome had.
  double CollapseXY(std::size_t qubit, AngleIndex delta, int outcome);

  // Samples an outcome (after snapping near-certain probabilities) and
  // collapses.
  int MeasureXY(std::size_t qubit, AngleIndex delta, RandomSource& rng);

 private:
  StateVector() = default;
  void CheckAlive(std::size_t qubit) const;

  std::vector<Amplitude> amps_;
  std::vector<bool> alive_;
  std::size_t num_qubits_ = 0;
  const KernelTable* kernels_ = nullptr;
};

}  // namespace pvbqc::qsim
