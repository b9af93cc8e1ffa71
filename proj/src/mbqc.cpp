// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/mbqc.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <numbers>
#include <set>

#include "pvbqc/errors.hpp"

namespace pvbqc {

namespace {

std::vector<std::size_t> Positions(const GraphSpec& graph) {
  std::vector<std::size_t> pos(graph.size());
  for (std::size_t i = 0; i < graph.order.size(); ++i) pos[graph.order[i]] = i;
  return pos;
}

bool IsComputation(const GraphSpec& graph, VertexId v) {
  return graph.roles[v] == Role::kComputation;
}

constexpr std::size_t kDeterministicSearchBudget = 100'000;

}  // namespace

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kComputation: return "computation";
    case Role::kTrap: return "trap";
    case Role::kDummy: return "dummy";
  }
  return "?";
}

std::vector<std::vector<VertexId>> GraphSpec::Adjacency() const {
  std::vector<std::vector<VertexId>> adj(size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<VertexId> GraphSpec::VerticesWithRole(Role role) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (roles[v] == role) out.push_back(v);
  }
  return out;
}

void ValidateGraph(const GraphSpec& graph) {
  const std::size_t n = graph.size();
  std::set<Edge> seen;
  for (auto [a, b] : graph.edges) {
    if (a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("self loop on vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw InvalidArgument("duplicate edge");
  }
  if (graph.order.size() != n) throw InvalidArgument("order must list every vertex once");
  std::vector<bool> listed(n, false);
  for (VertexId v : graph.order) {
    if (v >= n || listed[v]) throw InvalidArgument("order must list every vertex once");
    listed[v] = true;
  }
  const auto adj = graph.Adjacency();
  for (VertexId t = 0; t < n; ++t) {
    if (graph.roles[t] != Role::kTrap) continue;
    for (VertexId u : adj[t]) {
      if (graph.roles[u] != Role::kDummy) {
        throw InvalidArgument("trap " + std::to_string(t) + " has a non-dummy neighbor");
      }
    }
  }

  const auto pos = Positions(graph);
  std::set<VertexId> targets;
  for (const auto& [from, to] : graph.flow) {
    if (from >= n || to >= n) throw InvalidFlow("flow vertex out of range");
    if (!IsComputation(graph, from) || !IsComputation(graph, to)) {
      throw InvalidFlow("flow must stay on computation vertices");
    }
    if (!std::binary_search(adj[from].begin(), adj[from].end(), to)) {
      throw InvalidFlow("flow(" + std::to_string(from) + ") is not a neighbor");
    }
    if (pos[to] <= pos[from]) throw InvalidFlow("flow target measured before its source");
    if (!targets.insert(to).second) throw InvalidFlow("flow is not injective");
    for (VertexId k : adj[to]) {
      if (k != from && IsComputation(graph, k) && pos[k] < pos[from]) {
        throw InvalidFlow("neighbor of flow(" + std::to_string(from) +
                          ") is measured before it");
      }
    }
  }
}

Relabeling Normalize(const GraphSpec& graph) {
  ValidateGraph(graph);
  Relabeling out;
  out.new_id.resize(graph.size());
  for (std::size_t i = 0; i < graph.order.size(); ++i) {
    out.new_id[graph.order[i]] = static_cast<VertexId>(i);
  }
  GraphSpec& g = out.graph;
  g.roles.resize(graph.size());
  g.order.resize(graph.size());
  for (VertexId v = 0; v < graph.size(); ++v) {
    g.roles[out.new_id[v]] = graph.roles[v];
    g.order[v] = v;
  }
  for (auto [a, b] : graph.edges) {
    VertexId x = out.new_id[a];
    VertexId y = out.new_id[b];
    g.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& [from, to] : graph.flow) g.flow[out.new_id[from]] = out.new_id[to];
  return out;
}

Pattern NormalizePattern(const Pattern& pattern) {
  if (pattern.phi.size() != pattern.graph.size()) {
    throw InvalidArgument("pattern needs one angle per vertex");
  }
  Relabeling relabel = Normalize(pattern.graph);
  Pattern out{std::move(relabel.graph), std::vector<AngleIndex>(pattern.phi.size())};
  for (VertexId v = 0; v < pattern.phi.size(); ++v) {
    out.phi[relabel.new_id[v]] = pattern.phi[v];
  }
  return out;
}

DependencySets DeriveDependencies(const GraphSpec& graph) {
  ValidateGraph(graph);
  const std::size_t n = graph.size();
  const auto adj = graph.Adjacency();
  const auto pos = Positions(graph);
  DependencySets deps;
  deps.x.resize(n);
  deps.z.resize(n);
  for (const auto& [j, fj] : graph.flow) {
    deps.x[fj].push_back(j);
    for (VertexId i : adj[fj]) {
      if (i != j && IsComputation(graph, i)) deps.z[i].push_back(j);
    }
  }
  for (VertexId i = 0; i < n; ++i) {
    for (const auto* set : {&deps.x[i], &deps.z[i]}) {
      for (VertexId j : *set) {
        if (pos[j] >= pos[i]) throw InvalidFlow("dependency is not a predecessor");
      }
    }
    std::sort(deps.x[i].begin(), deps.x[i].end());
    std::sort(deps.z[i].begin(), deps.z[i].end());
  }
  return deps;
}

std::vector<VertexId> OutputVertices(const GraphSpec& graph) {
  std::vector<VertexId> out;
  for (VertexId v : graph.order) {
    if (IsComputation(graph, v) && !graph.flow.contains(v)) out.push_back(v);
  }
  return out;
}

TrapPlacement PlaceTraps(const GraphSpec& computation, std::size_t n_traps,
                         std::size_t dummy_degree, RandomSource& rng) {
  for (Role role : computation.roles) {
    if (role != Role::kComputation) {
      throw InvalidArgument("PlaceTraps expects a computation-only graph");
    }
  }
  GraphSpec g = computation;
  const std::size_t n_comp = computation.size();
  std::vector<VertexId> added;
  for (std::size_t t = 0; t < n_traps; ++t) {
    const auto trap = static_cast<VertexId>(g.roles.size());
    g.roles.push_back(Role::kTrap);
    added.push_back(trap);
    for (std::size_t k = 0; k < dummy_degree; ++k) {
      const auto dummy = static_cast<VertexId>(g.roles.size());
      g.roles.push_back(Role::kDummy);
      added.push_back(dummy);
      g.edges.emplace_back(trap, dummy);
      if (n_comp > 0) {
        g.edges.emplace_back(static_cast<VertexId>(rng.Below(n_comp)), dummy);
      }
    }
  }
  for (VertexId v : added) {
    const std::size_t at = rng.Below(g.order.size() + 1);
    g.order.insert(g.order.begin() + static_cast<std::ptrdiff_t>(at), v);
  }
  Relabeling relabel = Normalize(g);
  TrapPlacement out;
  out.graph = std::move(relabel.graph);
  out.comp_id.assign(relabel.new_id.begin(),
                     relabel.new_id.begin() + static_cast<std::ptrdiff_t>(n_comp));
  return out;
}

BlindingSecrets DrawSecrets(const GraphSpec& graph,
                            std::span<const AngleIndex> computation_phi,
                            RandomSource& rng) {
  const std::size_t n = graph.size();
  BlindingSecrets s;
  s.theta.resize(n);
  s.r.resize(n);
  s.d.assign(n, 0);
  s.phi.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    s.theta[v] = AngleIndex(static_cast<int>(rng.Below(8)));
    s.r[v] = rng.Bit();
    switch (graph.roles[v]) {
      case Role::kComputation:
        if (v >= computation_phi.size()) throw InvalidArgument("missing computation angle");
        s.phi[v] = computation_phi[v];
        break;
      case Role::kTrap:
        s.phi[v] = AngleIndex(0);
        break;
      case Role::kDummy:
        s.d[v] = rng.Bit();
        s.phi[v] = AngleIndex(static_cast<int>(rng.Below(8)));
        break;
    }
  }
  return s;
}

std::vector<qsim::QubitPrep> PrepareStates(const GraphSpec& graph,
                                           const BlindingSecrets& secrets) {
  const std::size_t n = graph.size();
  if (secrets.theta.size() < n || secrets.d.size() < n) {
    throw InvalidArgument("blinding secrets do not cover every vertex");
  }
  const auto adj = graph.Adjacency();
  std::vector<qsim::QubitPrep> preps(n);
  for (VertexId v = 0; v < n; ++v) {
    if (graph.roles[v] == Role::kDummy) {
      preps[v] = qsim::QubitPrep::Dummy(secrets.d[v]);
      continue;
    }
    int z = 0;
    for (VertexId u : adj[v]) {
      if (graph.roles[u] == Role::kDummy) z ^= secrets.d[u];
    }
    preps[v] = qsim::QubitPrep::PlusThetaWithZ(secrets.theta[v], z);
  }
  return preps;
}

std::vector<int> DecodeOutput(const GraphSpec& graph, std::span<const int> b,
                              std::span<const int> r) {
  std::vector<int> out;
  for (VertexId v : OutputVertices(graph)) {
    if (v >= b.size() || v >= r.size()) {
      throw InvalidArgument("output vertex " + std::to_string(v) + " was not measured");
    }
    out.push_back((b[v] ^ r[v]) & 1);
  }
  return out;
}

GraphSpec PathGraph(std::size_t n) {
  GraphSpec g;
  g.roles.assign(n, Role::kComputation);
  for (VertexId v = 0; v < n; ++v) {
    g.order.push_back(v);
    if (v + 1 < n) {
      g.edges.emplace_back(v, v + 1);
      g.flow[v] = v + 1;
    }
  }
  return g;
}

GraphSpec LadderGraph(std::size_t columns) {
  GraphSpec g;
  const auto id = [](std::size_t row, std::size_t col) {
    return static_cast<VertexId>(row + 2 * col);
  };
  g.roles.assign(2 * columns, Role::kComputation);
  for (std::size_t c = 0; c < columns; ++c) {
    g.order.push_back(id(0, c));
    g.order.push_back(id(1, c));
    if (c % 2 == 1) g.edges.emplace_back(id(0, c), id(1, c));
    if (c + 1 < columns) {
      for (std::size_t row = 0; row < 2; ++row) {
        g.edges.emplace_back(id(row, c), id(row, c + 1));
        g.flow[id(row, c)] = id(row, c + 1);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

double PathOutcomeZeroProbability(std::span<const AngleIndex> phi) {
  if (phi.empty()) throw InvalidArgument("empty path");
  using C = std::complex<double>;
  const double s = std::numbers::sqrt2 / 2.0;
  std::array<C, 2> psi{s, s};
  for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
    const C a0 = psi[0];
    const C a1 = std::polar(1.0, -phi[i].radians()) * psi[1];
    psi = {s * (a0 + a1), s * (a0 - a1)};
  }
  // <+_phi|psi> = (psi0 + e^{-i phi} psi1)/sqrt(2)
  const C overlap = s * (psi[0] + std::polar(1.0, -phi.back().radians()) * psi[1]);
  return std::norm(overlap);
}

Pattern DeterministicPath(std::size_t n, RandomSource& rng) {
  if (n < 2) throw InvalidArgument("a path pattern needs at least two vertices");
  std::vector<AngleIndex> phi(n);
  for (std::size_t attempt = 0; attempt < kDeterministicSearchBudget; ++attempt) {
    for (std::size_t i = 0; i + 1 < n; ++i) phi[i] = AngleIndex(static_cast<int>(rng.Below(8)));
    // Keep the first output angle that makes the outcome certain.
    const int start = static_cast<int>(rng.Below(8));
    for (int step = 0; step < 8; ++step) {
      phi[n - 1] = AngleIndex(start + step);
      const double p0 = PathOutcomeZeroProbability(phi);
      if (p0 < qsim::kProbabilitySnap || p0 > 1.0 - qsim::kProbabilitySnap) {
        return Pattern{PathGraph(n), phi};
      }
    }
  }
  throw ResourceError("no deterministic path pattern found");
}

bool IsDeterministic(const Pattern& pattern) {
  const GraphSpec& graph = pattern.graph;
  const DependencySets deps = DeriveDependencies(graph);
  const std::size_t n = graph.size();
  std::vector<qsim::QubitPrep> preps(n, qsim::QubitPrep::PlusTheta(AngleIndex(0)));
  auto state = qsim::StateVector::Prepare(preps);
  for (const auto& [a, b] : graph.edges) state.ApplyCz(a, b);
  std::vector<int> s(n, 0);
  std::vector<bool> is_output(n, false);
  for (VertexId v : OutputVertices(graph)) is_output[v] = true;
  for (VertexId v : graph.order) {
    int sx = 0;
    int sz = 0;
    for (VertexId j : deps.x[v]) sx ^= s[j];
    for (VertexId j : deps.z[v]) sz ^= s[j];
    const AngleIndex delta = DeltaPlain(pattern.phi[v], AngleIndex(0), 0, sx, 0, sz, 0);
    const double p0 = state.ProbabilityXY(v, delta);
    const bool certain = p0 < qsim::kProbabilitySnap || p0 > 1.0 - qsim::kProbabilitySnap;
    if (is_output[v] && !certain) return false;
    s[v] = p0 > 0.5 ? 0 : 1;
    state.CollapseXY(v, delta, s[v]);
  }
  return true;
}

Pattern DeterministicPattern(const GraphSpec& graph, RandomSource& rng) {
  Pattern pattern{graph, std::vector<AngleIndex>(graph.size())};
  for (std::size_t attempt = 0; attempt < kDeterministicSearchBudget; ++attempt) {
    for (auto& phi : pattern.phi) phi = AngleIndex(static_cast<int>(rng.Below(8)));
    if (IsDeterministic(pattern)) return pattern;
  }
  throw ResourceError("no deterministic pattern found");
}

std::vector<int> RunReferencePattern(const Pattern& pattern, RandomSource& rng) {
  const GraphSpec& graph = pattern.graph;
  const DependencySets deps = DeriveDependencies(graph);
  const std::size_t n = graph.size();
  std::vector<qsim::QubitPrep> preps(n, qsim::QubitPrep::PlusTheta(AngleIndex(0)));
  auto state = qsim::StateVector::Prepare(preps);
  for (const auto& [a, b] : graph.edges) state.ApplyCz(a, b);
  std::vector<int> s(n, 0);
  for (VertexId v : graph.order) {
    int sx = 0;
    int sz = 0;
    for (VertexId j : deps.x[v]) sx ^= s[j];
    for (VertexId j : deps.z[v]) sz ^= s[j];
    const AngleIndex delta = DeltaPlain(pattern.phi[v], AngleIndex(0), 0, sx, 0, sz, 0);
    s[v] = state.MeasureXY(v, delta, rng);
  }
  std::vector<int> zeros(n, 0);
  return DecodeOutput(graph, s, zeros);
}

}  // namespace pvbqc
