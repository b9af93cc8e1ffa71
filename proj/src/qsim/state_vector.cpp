// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/qsim/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pvbqc/errors.hpp"

namespace pvbqc::qsim {

Amplitude Phase(AngleIndex angle) {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  static constexpr Amplitude kTable[8] = {
      {1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h}, {-1.0, 0.0}, {-h, -h}, {0.0, -1.0}, {h, -h},
  };
  return kTable[angle.value()];
}

StateVector StateVector::Prepare(std::span<const QubitPrep> specs,
                                 std::size_t qubit_cap, const KernelTable& kernels) {
  if (specs.size() > qubit_cap) {
    throw ResourceError("statevector of " + std::to_string(specs.size()) +
                        " qubits exceeds the cap of " + std::to_string(qubit_cap));
  }
  StateVector state;
  state.kernels_ = &kernels;
  state.num_qubits_ = specs.size();
  state.alive_.assign(specs.size(), true);
  state.amps_.reserve(std::size_t{1} << specs.size());
  state.amps_.push_back(1.0);
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (const QubitPrep& spec : specs) {
    Amplitude a0;
    Amplitude a1;
    if (spec.kind == QubitPrep::Kind::kBasis) {
      a0 = spec.bit ? 0.0 : 1.0;
      a1 = spec.bit ? 1.0 : 0.0;
    } else {
      a0 = inv_sqrt2;
      a1 = inv_sqrt2 * Phase(spec.angle);
    }
    // The new qubit is the most significant bit so far.
    const std::size_t half = state.amps_.size();
    state.amps_.resize(2 * half);
    for (std::size_t k = 0; k < half; ++k) {
      state.amps_[half + k] = state.amps_[k] * a1;
      state.amps_[k] *= a0;
    }
  }
  return state;
}

bool StateVector::alive(std::size_t qubit) const {
  return qubit < num_qubits_ && alive_[qubit];
}

void StateVector::CheckAlive(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw InvalidArgument("qubit index " + std::to_string(qubit) + " out of range");
  }
  if (!alive_[qubit]) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " was already measured");
  }
}

double StateVector::NormSquared() const {
  return kernels_->norm_squared(amps_.data(), amps_.size());
}

void StateVector::ApplyCz(std::size_t a, std::size_t b) {
  CheckAlive(a);
  CheckAlive(b);
  if (a == b) throw InvalidArgument("CZ needs two distinct qubits");
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  kernels_->negate_where_all_set(amps_.data(), amps_.size(), mask);
}

void StateVector::ApplyZ(std::size_t qubit) {
  CheckAlive(qubit);
  kernels_->phase_where_set(amps_.data(), amps_.size(), static_cast<unsigned>(qubit),
                            Amplitude(-1.0, 0.0));
}

double StateVector::ProbabilityXY(std::size_t qubit, AngleIndex delta) const {
  CheckAlive(qubit);
  const Amplitude w = std::conj(Phase(delta));
  const double weight =
      kernels_->pair_weight(amps_.data(), amps_.size(), static_cast<unsigned>(qubit), w);
  return 0.5 * weight / NormSquared();
}

double StateVector::CollapseXY(std::size_t qubit, AngleIndex delta, int outcome) {
  CheckAlive(qubit);
  const unsigned q = static_cast<unsigned>(qubit);
  Amplitude w = std::conj(Phase(delta));
  if (outcome & 1) w = -w;
  const double norm = NormSquared();
  const double weight = kernels_->pair_weight(amps_.data(), amps_.size(), q, w);
  if (!(weight > 0.0)) throw InvalidArgument("collapse onto a zero-probability outcome");
  // |a0'|^2 + |a1'|^2 summed equals 2 s^2 weight, so s = 1/sqrt(2 weight).
  kernels_->pair_collapse(amps_.data(), amps_.size(), q, w, 1.0 / std::sqrt(2.0 * weight));
  alive_[qubit] = false;
  return 0.5 * weight / norm;
}

int StateVector::MeasureXY(std::size_t qubit, AngleIndex delta, RandomSource& rng) {
  double p0 = ProbabilityXY(qubit, delta);
  if (p0 < kProbabilitySnap) p0 = 0.0;
  if (p0 > 1.0 - kProbabilitySnap) p0 = 1.0;
  const int outcome = rng.UniformDouble() < p0 ? 0 : 1;
  CollapseXY(qubit, delta, outcome);
  return outcome;
}

}  // namespace pvbqc::qsim
