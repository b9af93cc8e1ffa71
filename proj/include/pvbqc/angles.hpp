// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace pvbqc {

// Measurement angle k * pi/4, k in {0..7}. Arithmetic is modulo 8.
class AngleIndex {
 public:
  constexpr AngleIndex() = default;
  constexpr explicit AngleIndex(int k) : k_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {}

  constexpr int value() const { return k_; }
  constexpr int bit(int m) const { return (k_ >> m) & 1; }
  double radians() const;

  friend constexpr AngleIndex operator+(AngleIndex a, AngleIndex b) {
    return AngleIndex(a.k_ + b.k_);
  }
  friend constexpr AngleIndex operator-(AngleIndex a) { return AngleIndex(-a.k_); }
  friend constexpr AngleIndex operator-(AngleIndex a, AngleIndex b) {
    return AngleIndex(a.k_ - b.k_);
  }
  friend constexpr bool operator==(AngleIndex a, AngleIndex b) = default;

 private:
  std::uint8_t k_ = 0;
};

inline constexpr AngleIndex kPi{4};

// Atoms of the fixed formula (a1 | a2) ^ (a3 | a4).
enum class Atom : std::uint8_t {
  kZero,
  kOne,
  kParityX,
  kNotParityX,
  kParityZ,
  kNotParityZ,
};

inline constexpr std::array<Atom, 6> kAllAtoms = {
    Atom::kZero,    Atom::kOne,     Atom::kParityX,
    Atom::kNotParityX, Atom::kParityZ, Atom::kNotParityZ};

std::string_view AtomName(Atom atom);

// Plaintext value of an atom given the outcome parities over X_i and Z_i.
int EvalAtom(Atom atom, int parity_x, int parity_z);

struct BitFormula {
  std::array<Atom, 4> atoms{Atom::kZero, Atom::kZero, Atom::kZero, Atom::kZero};

  int Evaluate(int parity_x, int parity_z) const;
  friend bool operator==(const BitFormula&, const BitFormula&) = default;
};

// Bit m of the angle index: k = 4*bit2 + 2*bit1 + bit0.
using CompiledAngle = std::array<BitFormula, 3>;

// Blinded feed-forward angle
//   delta = (-1)^(bX ^ rX) phi + theta + pi r + pi (bZ ^ rZ)   (mod 2 pi)
// where bX, bZ (rX, rZ) are parities of outcomes (masks) over X_i, Z_i.
AngleIndex DeltaPlain(AngleIndex phi, AngleIndex theta, int r, int parity_bx,
                      int parity_rx, int parity_bz, int parity_rz);

// Reduces DeltaPlain to three formulas over the parities bX, bZ, with the
// masks rX, rZ and everything else folded in as constants.
CompiledAngle CompileBits(AngleIndex phi, AngleIndex theta, int r, int parity_rx,
                          int parity_rz);

// Assembles k from the three evaluated formulas.
AngleIndex EvaluateCompiled(const CompiledAngle& formulas, int parity_bx, int parity_bz);

// True iff `formulas` reproduce DeltaPlain for all four (bX, bZ).
bool FormulasMatch(const CompiledAngle& formulas, AngleIndex phi, AngleIndex theta,
                   int r, int parity_rx, int parity_rz);

// Exhaustive self-check of CompileBits for one parameter tuple.
bool VerifyCompile(AngleIndex phi, AngleIndex theta, int r, int parity_rx,
                   int parity_rz);

namespace detail {

// CompileBits from the two branch values: a = delta for (bX ^ rX) = 0 and
// b = delta for (bX ^ rX) = 1, both before the pi (bZ ^ rZ) term.
CompiledAngle CompileFromBranches(AngleIndex a, AngleIndex b, int parity_rx,
                                  int parity_rz);

}  // namespace detail

}  // namespace pvbqc
