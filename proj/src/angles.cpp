// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/angles.hpp"

#include <numbers>

namespace pvbqc {

double AngleIndex::radians() const { return k_ * std::numbers::pi / 4.0; }

std::string_view AtomName(Atom atom) {
  switch (atom) {
    case Atom::kZero: return "0";
    case Atom::kOne: return "1";
    case Atom::kParityX: return "bX";
    case Atom::kNotParityX: return "!bX";
    case Atom::kParityZ: return "bZ";
    case Atom::kNotParityZ: return "!bZ";
  }
  return "?";
}

int EvalAtom(Atom atom, int parity_x, int parity_z) {
  switch (atom) {
    case Atom::kZero: return 0;
    case Atom::kOne: return 1;
    case Atom::kParityX: return parity_x & 1;
    case Atom::kNotParityX: return (parity_x & 1) ^ 1;
    case Atom::kParityZ: return parity_z & 1;
    case Atom::kNotParityZ: return (parity_z & 1) ^ 1;
  }
  return 0;
}

int BitFormula::Evaluate(int parity_x, int parity_z) const {
  int a = EvalAtom(atoms[0], parity_x, parity_z) | EvalAtom(atoms[1], parity_x, parity_z);
  int b = EvalAtom(atoms[2], parity_x, parity_z) | EvalAtom(atoms[3], parity_x, parity_z);
  return a ^ b;
}

AngleIndex DeltaPlain(AngleIndex phi, AngleIndex theta, int r, int parity_bx,
                      int parity_rx, int parity_bz, int parity_rz) {
  const int sx = (parity_bx ^ parity_rx) & 1;
  const int sz = (parity_bz ^ parity_rz) & 1;
  AngleIndex signed_phi = sx ? -phi : phi;
  return signed_phi + theta + AngleIndex(4 * (r & 1)) + AngleIndex(4 * sz);
}

namespace detail {

CompiledAngle CompileFromBranches(AngleIndex a, AngleIndex b, int parity_rx,
                                  int parity_rz) {
  // u = bX ^ rX and v = bZ ^ rZ expressed as atoms over the raw parities.
  const Atom u = parity_rx ? Atom::kNotParityX : Atom::kParityX;
  const Atom not_u = parity_rx ? Atom::kParityX : Atom::kNotParityX;
  const Atom v = parity_rz ? Atom::kNotParityZ : Atom::kParityZ;

  // Bit m of the selected branch: a_m when u = 0, b_m when u = 1.
  auto select = [&](int m) {
    const int am = a.bit(m);
    const int bm = b.bit(m);
    if (am == bm) return am ? Atom::kOne : Atom::kZero;
    return am == 0 ? u : not_u;
  };

  CompiledAngle out;
  out[0].atoms = {select(0), Atom::kZero, Atom::kZero, Atom::kZero};
  out[1].atoms = {select(1), Atom::kZero, Atom::kZero, Atom::kZero};
  // The pi * v term only reaches bit 2.
  out[2].atoms = {select(2), Atom::kZero, v, Atom::kZero};
  return out;
}

}  // namespace detail

CompiledAngle CompileBits(AngleIndex phi, AngleIndex theta, int r, int parity_rx,
                          int parity_rz) {
  const AngleIndex theta_r = theta + AngleIndex(4 * (r & 1));
  return detail::CompileFromBranches(phi + theta_r, -phi + theta_r, parity_rx,
                                     parity_rz);
}

AngleIndex EvaluateCompiled(const CompiledAngle& formulas, int parity_bx,
                            int parity_bz) {
  int k = 0;
  for (int m = 0; m < 3; ++m) k |= formulas[m].Evaluate(parity_bx, parity_bz) << m;
  return AngleIndex(k);
}

bool FormulasMatch(const CompiledAngle& formulas, AngleIndex phi, AngleIndex theta,
                   int r, int parity_rx, int parity_rz) {
  for (int bx = 0; bx < 2; ++bx) {
    for (int bz = 0; bz < 2; ++bz) {
      if (EvaluateCompiled(formulas, bx, bz) !=
          DeltaPlain(phi, theta, r, bx, parity_rx, bz, parity_rz)) {
        return false;
      }
    }
  }
  return true;
}

bool VerifyCompile(AngleIndex phi, AngleIndex theta, int r, int parity_rx,
                   int parity_rz) {
  return FormulasMatch(CompileBits(phi, theta, r, parity_rx, parity_rz), phi, theta,
                       r, parity_rx, parity_rz);
}

}  // namespace pvbqc
