// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <optional>
#include <sstream>
#include <string>

#include "pvbqc/errors.hpp"
#include "pvbqc/mbqc.hpp"

namespace pvbqc {

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t Number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" +
                     std::string(token) + "'");
  }
  return value;
}

Role ParseRole(std::string_view token, std::size_t line_no) {
  for (Role role : {Role::kComputation, Role::kTrap, Role::kDummy}) {
    if (token == RoleName(role)) return role;
  }
  throw ParseError("line " + std::to_string(line_no) + ": unknown role '" +
                   std::string(token) + "'");
}

}  // namespace

Pattern ParseGraphText(std::string_view text) {
  std::vector<std::optional<Role>> roles;
  std::vector<Edge> edges;
  std::optional<std::vector<VertexId>> order;
  std::map<VertexId, VertexId> flow;
  std::map<VertexId, int> phi;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = Tokens(line);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto expect = [&](std::size_t n) {
      if (tok.size() != n) throw ParseError(where + "wrong field count for '" + std::string(tok[0]) + "'");
    };
    if (tok[0] == "vertex") {
      expect(3);
      const auto id = Number(tok[1], line_no);
      if (id > 1'000'000) throw ParseError(where + "vertex id too large");
      if (roles.size() <= id) roles.resize(id + 1);
      if (roles[id]) throw ParseError(where + "vertex declared twice");
      roles[id] = ParseRole(tok[2], line_no);
    } else if (tok[0] == "edge") {
      expect(3);
      edges.emplace_back(static_cast<VertexId>(Number(tok[1], line_no)),
                         static_cast<VertexId>(Number(tok[2], line_no)));
    } else if (tok[0] == "order") {
      if (order) throw ParseError(where + "order given twice");
      order.emplace();
      for (std::size_t i = 1; i < tok.size(); ++i) {
        order->push_back(static_cast<VertexId>(Number(tok[i], line_no)));
      }
    } else if (tok[0] == "flow") {
      expect(3);
      const auto from = static_cast<VertexId>(Number(tok[1], line_no));
      if (!flow.emplace(from, static_cast<VertexId>(Number(tok[2], line_no))).second) {
        throw ParseError(where + "flow given twice for a vertex");
      }
    } else if (tok[0] == "phi") {
      expect(3);
      const auto id = static_cast<VertexId>(Number(tok[1], line_no));
      const auto k = Number(tok[2], line_no);
      if (k > 7) throw ParseError(where + "angle index must be 0..7");
      if (!phi.emplace(id, static_cast<int>(k)).second) throw ParseError(where + "phi given twice");
    } else {
      throw ParseError(where + "unknown record '" + std::string(tok[0]) + "'");
    }
  }

  if (roles.empty()) throw ParseError("graph has no vertices");
  Pattern pattern;
  for (std::size_t v = 0; v < roles.size(); ++v) {
    if (!roles[v]) throw ParseError("vertex ids must be 0..n-1; missing " + std::to_string(v));
    pattern.graph.roles.push_back(*roles[v]);
  }
  const std::size_t n = roles.size();
  pattern.graph.edges = std::move(edges);
  if (order) {
    pattern.graph.order = std::move(*order);
  } else {
    for (VertexId v = 0; v < n; ++v) pattern.graph.order.push_back(v);
  }
  pattern.graph.flow = std::move(flow);
  pattern.phi.assign(n, AngleIndex(0));
  for (const auto& [id, k] : phi) {
    if (id >= n) throw ParseError("phi for unknown vertex " + std::to_string(id));
    pattern.phi[id] = AngleIndex(k);
  }
  ValidateGraph(pattern.graph);
  return pattern;
}

std::string FormatGraphText(const Pattern& pattern) {
  const GraphSpec& g = pattern.graph;
  std::ostringstream out;
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "vertex " << v << ' ' << RoleName(g.roles[v]) << '\n';
  }
  for (const auto& [a, b] : g.edges) out << "edge " << a << ' ' << b << '\n';
  out << "order";
  for (VertexId v : g.order) out << ' ' << v;
  out << '\n';
  for (const auto& [from, to] : g.flow) out << "flow " << from << ' ' << to << '\n';
  for (VertexId v = 0; v < pattern.phi.size() && v < g.size(); ++v) {
    if (pattern.phi[v].value() != 0) out << "phi " << v << ' ' << pattern.phi[v].value() << '\n';
  }
  return out.str();
}

}  // namespace pvbqc
