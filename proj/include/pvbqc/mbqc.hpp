// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvbqc/angles.hpp"
#include "pvbqc/elgamal.hpp"
#include "pvbqc/qsim/state_vector.hpp"
#include "pvbqc/random.hpp"

namespace pvbqc {

enum class Role : std::uint8_t { kComputation, kTrap, kDummy };

std::string_view RoleName(Role role);

using Edge = std::pair<VertexId, VertexId>;

// Measurement graph. Vertex ids index `roles`; `order` lists every vertex
// once in measurement order; `flow` is a causal flow on the computation
// subgraph.
struct GraphSpec {
  std::vector<Role> roles;
  std::vector<Edge> edges;
  std::vector<VertexId> order;
  std::map<VertexId, VertexId> flow;

  std::size_t size() const { return roles.size(); }
  std::vector<std::vector<VertexId>> Adjacency() const;
  std::vector<VertexId> VerticesWithRole(Role role) const;
};

// Computation graph plus the angle phi of every vertex.
struct Pattern {
  GraphSpec graph;
  std::vector<AngleIndex> phi;
};

// Throws InvalidArgument for structural problems (self loops, duplicate
// edges, bad order, trap adjacent to a non-dummy) and InvalidFlow when the
// flow is not a causal flow on the computation subgraph.
void ValidateGraph(const GraphSpec& graph);

struct Relabeling {
  GraphSpec graph;
  std::vector<VertexId> new_id;  // indexed by old id
};

// Renames vertices so that id == measurement position; edges become
// (min, max) sorted.
Relabeling Normalize(const GraphSpec& graph);

Pattern NormalizePattern(const Pattern& pattern);

struct DependencySets {
  std::vector<std::vector<VertexId>> x;  // X_i = {j : flow(j) = i}
  std::vector<std::vector<VertexId>> z;  // Z_i = {j != i : i adjacent to flow(j)}
};

// Only computation vertices get non-empty sets. Validates the graph first.
DependencySets DeriveDependencies(const GraphSpec& graph);

// Computation vertices outside the flow's domain, in measurement order.
std::vector<VertexId> OutputVertices(const GraphSpec& graph);

struct TrapPlacement {
  GraphSpec graph;                // normalized
  std::vector<VertexId> comp_id;  // comp_id[c]: new id of computation vertex c
};

// Adds `n_traps` traps, each joined to `dummy_degree` fresh dummies; every
// dummy is also joined to one uniformly chosen computation vertex. New
// vertices are inserted at uniform positions of the measurement order.
TrapPlacement PlaceTraps(const GraphSpec& computation, std::size_t n_traps,
                         std::size_t dummy_degree, RandomSource& rng);

// Alice's secrets, indexed by vertex id.
struct BlindingSecrets {
  std::vector<AngleIndex> theta;
  std::vector<int> r;
  std::vector<int> d;  // 0 for non-dummies
  std::vector<AngleIndex> phi;
};

// theta, r uniform for every vertex; d uniform for dummies; phi taken from
// `computation_phi` (indexed by vertex id, read for computation vertices
// only), 0 for traps and uniform for dummies.
BlindingSecrets DrawSecrets(const GraphSpec& graph,
                            std::span<const AngleIndex> computation_phi,
                            RandomSource& rng);

// Dummies -> |d>; every other vertex -> Z^(xor of adjacent dummy d's)|+_theta>.
std::vector<qsim::QubitPrep> PrepareStates(const GraphSpec& graph,
                                           const BlindingSecrets& secrets);

// b ^ r on OutputVertices(graph).
std::vector<int> DecodeOutput(const GraphSpec& graph, std::span<const int> b,
                              std::span<const int> r);

// Path 0 - 1 - ... - (n-1) with flow i -> i+1.
GraphSpec PathGraph(std::size_t n);

// Two rows of `columns` vertices, ids column-major (row + 2 * column), rows
// as paths with flow along the row, rungs on odd columns.
GraphSpec LadderGraph(std::size_t columns);

// Logical single-qubit circuit of a path pattern: |+>, then H P(-phi_i) for
// every vertex but the last, then the probability that the last vertex's
// XY-plane measurement at phi_last yields 0.
double PathOutcomeZeroProbability(std::span<const AngleIndex> phi);

// Random path pattern of n >= 2 vertices whose output is deterministic.
// Throws ResourceError if the search budget runs out.
Pattern DeterministicPath(std::size_t n, RandomSource& rng);

// True when every output of the unblinded pattern is certain. Flow makes
// the output law independent of earlier outcomes, so one branch suffices.
bool IsDeterministic(const Pattern& pattern);

// Uniform angles on `graph` until IsDeterministic holds. Throws
// ResourceError if the search budget runs out.
Pattern DeterministicPattern(const GraphSpec& graph, RandomSource& rng);

// Unblinded execution of a normalized pattern (theta = 0, r = 0, no traps),
// outputs in measurement order.
std::vector<int> RunReferencePattern(const Pattern& pattern, RandomSource& rng);

// Text format, one record per line, '#' starts a comment:
//   vertex <id> <computation|trap|dummy>
//   edge <a> <b>
//   order <id> <id> ...
//   flow <from> <to>
//   phi <id> <k>            (angle k * pi/4, computation vertices)
// Vertex ids must be 0..n-1. Throws ParseError on malformed input and
// propagates ValidateGraph errors.
Pattern ParseGraphText(std::string_view text);
std::string FormatGraphText(const Pattern& pattern);

}  // namespace pvbqc
