// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Slow, obviously-correct reference implementations used to freeze expected
// values in tests.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "pvbqc/mbqc.hpp"

namespace pvbqc::testing {

inline bool TrialDivisionPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t NaiveModExp(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  for (std::uint64_t i = 0; i < exp; ++i) acc = acc * (base % mod) % mod;
  return acc;
}

// All (q, p) with p of exactly `bits` bits and both prime, q = 2p + 1.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> SafePrimesOfSize(unsigned bits) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = std::uint64_t{1} << (bits - 1); p < (std::uint64_t{1} << bits); ++p) {
    if (TrialDivisionPrime(p) && TrialDivisionPrime(2 * p + 1)) out.emplace_back(2 * p + 1, p);
  }
  return out;
}

// k_delta of the feed-forward rule, written out directly.
inline int DeltaOracle(int phi, int theta, int r, int bx, int rx, int bz, int rz) {
  const int sign = ((bx ^ rx) & 1) ? -1 : 1;
  return (((sign * phi + theta + 4 * r + 4 * ((bz ^ rz) & 1)) % 8) + 8) % 8;
}

// What Bob does to one vertex of an unblinded run.
struct Deviation {
  enum class Kind { kNone, kOffset, kFlip };
  Kind kind = Kind::kNone;
  VertexId vertex = 0;
  int offset = 0;  // pi/4 units
};

// Exact distribution of the output bits of a pattern (vertex ids equal
// measurement order), enumerating every measurement branch on a plain
// dense state vector.
class BranchingSimulator {
 public:
  using C = std::complex<double>;

  static std::map<std::vector<int>, double> OutputDistribution(const Pattern& pattern,
                                                               Deviation deviation = {}) {
    const GraphSpec& g = pattern.graph;
    const std::size_t n = g.size();
    std::vector<std::vector<VertexId>> x(n), z(n);
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : g.edges) adjacent[a][b] = adjacent[b][a] = true;
    for (const auto& [j, fj] : g.flow) {
      x[fj].push_back(j);
      for (VertexId i = 0; i < n; ++i) {
        if (i != j && adjacent[fj][i]) z[i].push_back(j);
      }
    }
    std::vector<C> psi(std::size_t{1} << n, C(std::pow(2.0, -0.5 * n), 0.0));
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
      for (const auto& [a, b] : g.edges) {
        if (((idx >> a) & 1) && ((idx >> b) & 1)) psi[idx] = -psi[idx];
      }
    }
    std::vector<VertexId> outputs;
    for (VertexId v = 0; v < n; ++v) {
      if (!g.flow.contains(v)) outputs.push_back(v);
    }
    std::map<std::vector<int>, double> dist;
    std::vector<int> s(n, 0);
    Recurse(pattern, deviation, x, z, outputs, psi, 0, 1.0, s, dist);
    return dist;
  }

 private:
  static void Recurse(const Pattern& pattern, const Deviation& dev,
                      const std::vector<std::vector<VertexId>>& x,
                      const std::vector<std::vector<VertexId>>& z,
                      const std::vector<VertexId>& outputs, const std::vector<C>& psi,
                      VertexId v, double weight, std::vector<int>& s,
                      std::map<std::vector<int>, double>& dist) {
    const std::size_t n = pattern.graph.size();
    if (v == n) {
      std::vector<int> out;
      for (VertexId o : outputs) out.push_back(s[o]);
      dist[out] += weight;
      return;
    }
    int sx = 0, sz = 0;
    for (VertexId j : x[v]) sx ^= s[j];
    for (VertexId j : z[v]) sz ^= s[j];
    int k = (sx ? -1 : 1) * pattern.phi[v].value() + 4 * sz;
    if (dev.kind == Deviation::Kind::kOffset && dev.vertex == v) k += dev.offset;
    const double angle = k * std::numbers::pi / 4.0;
    const C phase = std::polar(1.0, angle);
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double sign = outcome ? -1.0 : 1.0;
      std::vector<C> next(psi.size(), C(0, 0));
      double prob = 0;
      for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        if ((idx >> v) & 1) continue;
        const std::size_t one = idx | (std::size_t{1} << v);
        const C c = (psi[idx] + sign * std::conj(phase) * psi[one]) / std::sqrt(2.0);
        next[idx] = c / std::sqrt(2.0);
        next[one] = sign * phase * c / std::sqrt(2.0);
        prob += std::norm(c);
      }
      if (prob < 1e-12) continue;
      for (C& a : next) a /= std::sqrt(prob);
      s[v] = outcome ^ static_cast<int>(dev.kind == Deviation::Kind::kFlip && dev.vertex == v);
      Recurse(pattern, dev, x, z, outputs, next, v + 1, weight * prob, s, dist);
    }
    s[v] = 0;
  }
};

}  // namespace pvbqc::testing
