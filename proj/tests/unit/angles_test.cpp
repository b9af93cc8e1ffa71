// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "pvbqc/angles.hpp"

namespace pvbqc {
namespace {

using testing::DeltaOracle;

BitFormula Formula(Atom a1, Atom a2, Atom a3, Atom a4) { return BitFormula{{a1, a2, a3, a4}}; }

constexpr Atom k0 = Atom::kZero;
constexpr Atom k1 = Atom::kOne;

TEST_CASE("AngleIndex arithmetic wraps modulo 8") {
  CHECK(AngleIndex(9).value() == 1);
  CHECK(AngleIndex(-1).value() == 7);
  CHECK(AngleIndex(-17).value() == 7);
  CHECK((AngleIndex(5) + AngleIndex(6)).value() == 3);
  CHECK((AngleIndex(2) - AngleIndex(5)).value() == 5);
  CHECK((-AngleIndex(3)).value() == 5);
  CHECK(kPi.value() == 4);
  CHECK(AngleIndex(6).bit(0) == 0);
  CHECK(AngleIndex(6).bit(1) == 1);
  CHECK(AngleIndex(6).bit(2) == 1);
  CHECK(AngleIndex(2).radians() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("Atoms and formulas") {
  CHECK(EvalAtom(Atom::kParityX, 1, 0) == 1);
  CHECK(EvalAtom(Atom::kNotParityX, 1, 0) == 0);
  CHECK(EvalAtom(Atom::kParityZ, 1, 0) == 0);
  CHECK(EvalAtom(Atom::kNotParityZ, 1, 0) == 1);
  CHECK(AtomName(Atom::kNotParityZ) == "!bZ");
  const BitFormula f = Formula(Atom::kParityX, k0, Atom::kParityZ, k0);
  CHECK(f.Evaluate(0, 0) == 0);
  CHECK(f.Evaluate(1, 0) == 1);
  CHECK(f.Evaluate(1, 1) == 0);
  CHECK(Formula(k1, Atom::kParityX, k0, k0).Evaluate(0, 0) == 1);
}

TEST_CASE("Feed-forward examples") {
  for (int theta = 0; theta < 8; ++theta) {
    for (int r = 0; r < 2; ++r) {
      for (int bz = 0; bz < 2; ++bz) {
        // Trap angle: no Z dependencies, so bZ = rZ = 0.
        CHECK(DeltaPlain(AngleIndex(0), AngleIndex(theta), r, bz, 0, 0, 0) ==
              AngleIndex(theta + 4 * r));
      }
    }
  }
  CHECK(DeltaPlain(AngleIndex(2), AngleIndex(1), 0, 1, 1, 0, 0).value() == 3);
  CHECK(DeltaPlain(AngleIndex(2), AngleIndex(1), 0, 0, 1, 1, 1).value() == 7);
  CHECK(DeltaOracle(2, 1, 0, 0, 1, 1, 1) == 7);
}

TEST_CASE("Compiled formula examples") {
  const CompiledAngle c = CompileBits(AngleIndex(2), AngleIndex(1), 0, 0, 0);
  CHECK(c[0] == Formula(k1, k0, k0, k0));
  CHECK(c[1] == Formula(k1, k0, k0, k0));
  CHECK(c[2] == Formula(Atom::kParityX, k0, Atom::kParityZ, k0));

  for (int theta = 0; theta < 8; ++theta) {
    for (int r = 0; r < 2; ++r) {
      for (int rz = 0; rz < 2; ++rz) {
        const CompiledAngle t = CompileBits(AngleIndex(0), AngleIndex(theta), r, 0, rz);
        const AngleIndex theta_prime(theta + 4 * r);
        CHECK(t[0] == Formula(theta_prime.bit(0) ? k1 : k0, k0, k0, k0));
        CHECK(t[1] == Formula(theta_prime.bit(1) ? k1 : k0, k0, k0, k0));
        CHECK(t[2] == Formula(theta_prime.bit(2) ? k1 : k0, k0,
                              rz ? Atom::kNotParityZ : Atom::kParityZ, k0));
        // Independent of the X parity.
        for (int bz = 0; bz < 2; ++bz) {
          CHECK(EvaluateCompiled(t, 0, bz) == EvaluateCompiled(t, 1, bz));
        }
      }
    }
  }

  const CompiledAngle zero = CompileBits(AngleIndex(0), AngleIndex(0), 0, 0, 0);
  CHECK(EvaluateCompiled(zero, 0, 0).value() == 0);
  CHECK(EvaluateCompiled(zero, 1, 0).value() == 0);
}

TEST_CASE("Compilation matches the feed-forward rule on every parameter combination") {
  int mismatches = 0;
  int combos = 0;
  for (int phi = 0; phi < 8; ++phi) {
    for (int theta = 0; theta < 8; ++theta) {
      for (int r = 0; r < 2; ++r) {
        for (int rx = 0; rx < 2; ++rx) {
          for (int rz = 0; rz < 2; ++rz) {
            ++combos;
            const CompiledAngle c = CompileBits(AngleIndex(phi), AngleIndex(theta), r, rx, rz);
            for (int bx = 0; bx < 2; ++bx) {
              for (int bz = 0; bz < 2; ++bz) {
                mismatches += EvaluateCompiled(c, bx, bz).value() !=
                              DeltaOracle(phi, theta, r, bx, rx, bz, rz);
              }
            }
            CHECK(VerifyCompile(AngleIndex(phi), AngleIndex(theta), r, rx, rz));
          }
        }
      }
    }
  }
  CHECK(combos * 4 == 2048);
  CHECK(mismatches == 0);
}

TEST_CASE("Off-by-one in the second branch is caught") {
  int caught = 0;
  for (int phi = 0; phi < 8; ++phi) {
    for (int theta = 0; theta < 8; ++theta) {
      for (int r = 0; r < 2; ++r) {
        for (int rx = 0; rx < 2; ++rx) {
          for (int rz = 0; rz < 2; ++rz) {
            const AngleIndex tp(theta + 4 * r);
            const AngleIndex a = AngleIndex(phi) + tp;
            const AngleIndex b = -AngleIndex(phi) + tp + AngleIndex(1);
            const CompiledAngle bad = detail::CompileFromBranches(a, b, rx, rz);
            caught += !FormulasMatch(bad, AngleIndex(phi), AngleIndex(theta), r, rx, rz);
          }
        }
      }
    }
  }
  CHECK(caught == 512);
}

TEST_CASE("Trap angles depend only on theta, r and the Z parity") {
  for (int theta = 0; theta < 8; ++theta) {
    for (int r = 0; r < 2; ++r) {
      std::set<int> by_z[2];
      for (int bx = 0; bx < 2; ++bx) {
        for (int rx = 0; rx < 2; ++rx) {
          for (int bz = 0; bz < 2; ++bz) {
            for (int rz = 0; rz < 2; ++rz) {
              by_z[bz ^ rz].insert(
                  DeltaPlain(AngleIndex(0), AngleIndex(theta), r, bx, rx, bz, rz).value());
            }
          }
        }
      }
      CHECK(by_z[0] == std::set<int>{(theta + 4 * r) % 8});
      CHECK(by_z[1] == std::set<int>{(theta + 4 * r + 4) % 8});
    }
  }
}

TEST_CASE("Uniform theta makes delta uniform") {
  for (int phi = 0; phi < 8; ++phi) {
    for (int bits = 0; bits < 32; ++bits) {
      const int r = bits & 1, bx = (bits >> 1) & 1, rx = (bits >> 2) & 1;
      const int bz = (bits >> 3) & 1, rz = (bits >> 4) & 1;
      std::set<int> seen;
      for (int theta = 0; theta < 8; ++theta) {
        seen.insert(DeltaPlain(AngleIndex(phi), AngleIndex(theta), r, bx, rx, bz, rz).value());
      }
      CHECK(seen.size() == 8);
    }
  }
}

}  // namespace
}  // namespace pvbqc
