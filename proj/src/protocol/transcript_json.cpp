// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/transcript_json.hpp"

#include <json.hpp>

#include "pvbqc/errors.hpp"

namespace pvbqc::protocol {

namespace {

using Json = nlohmann::ordered_json;

// --- writing ----------------------------------------------------------------

Json CtJson(const Ciphertext& ct) { return Json::array({ToHex(ct.u), ToHex(ct.v)}); }

Json Level0Json(const Level0& l0) {
  Json pairs = Json::array();
  for (const CtPair& pair : l0.pairs) pairs.push_back(Json::array({CtJson(pair.left), CtJson(pair.right)}));
  return {{"level", 0}, {"key", l0.key_index}, {"pairs", std::move(pairs)}};
}

Json Level1Json(const Level1& l1) {
  Json entries = Json::array();
  for (const Level0& l0 : l1.entries) entries.push_back(Level0Json(l0));
  return {{"level", 1}, {"entries", std::move(entries)}};
}

Json Level2Json(const Level2& l2) {
  Json pairs = Json::array();
  for (const auto& pair : l2.pairs) pairs.push_back(Json::array({Level1Json(pair[0]), Level1Json(pair[1])}));
  return {{"level", 2}, {"pairs", std::move(pairs)}};
}

Json Level3Json(const Level3& l3) {
  return {{"level", 3},
          {"entries", Json::array({Level2Json(l3.entries[0]), Level2Json(l3.entries[1])})}};
}

Json DeltaJson(const EncodedDelta& delta) {
  Json bits = Json::array();
  for (const Level3& l3 : delta.bits) bits.push_back(Level3Json(l3));
  return {{"bits", std::move(bits)}};
}

Json PublicKeyJson(const PublicKey& pk) {
  return {{"q", ToHex(pk.group.q)},
          {"p", ToHex(pk.group.p)},
          {"g", ToHex(pk.group.g)},
          {"h", ToHex(pk.h)}};
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

Json PayloadJson(const Message& message) {
  return std::visit(
      Overloaded{
          [](const AnnounceGraph& m) {
            Json edges = Json::array();
            for (const auto& [a, b] : m.edges) edges.push_back(Json::array({a, b}));
            return Json{{"vertices", m.vertices}, {"edges", std::move(edges)}};
          },
          [](const EncryptedAngle& m) {
            Json out = {{"vertex", m.vertex}};
            if (const auto* plain = std::get_if<AngleIndex>(&m.angle)) {
              out["plain"] = plain->value();
            } else {
              out["delta"] = DeltaJson(std::get<EncodedDelta>(m.angle));
            }
            return out;
          },
          [](const KeyAndResult& m) {
            return Json{{"vertex", m.vertex},
                        {"pk", PublicKeyJson(m.pk)},
                        {"key_index", m.result.key_index},
                        {"result", Json::array({CtJson(m.result.first), CtJson(m.result.second)})}};
          },
          [](const TrapReveal& m) {
            Json expected = Json::array();
            for (const auto& [t, r] : m.expected) expected.push_back(Json::array({t, r}));
            return Json{{"traps", m.traps}, {"expected", std::move(expected)}};
          },
          [](const SecretKeys& m) {
            Json keys = Json::array();
            for (const auto& [v, sk] : m.keys) keys.push_back(Json::array({v, ToHex(sk.x)}));
            return Json{{"keys", std::move(keys)}};
          },
          [](const Abort& m) { return Json{{"reason", m.reason}}; },
          [](const Dispute& m) { return Json{{"claim", m.claim}}; },
      },
      message);
}

// --- reading ----------------------------------------------------------------

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t Unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

VertexId Vertex(const Json& j) {
  const auto v = Unsigned(j, "vertex id");
  if (v > 0xffffffffULL) throw ParseError("vertex id out of range");
  return static_cast<VertexId>(v);
}

int BitValue(const Json& j) {
  const auto b = Unsigned(j, "bit");
  if (b > 1) throw ParseError("bit must be 0 or 1");
  return static_cast<int>(b);
}

BigInt Hex(const Json& j) {
  if (!j.is_string()) throw ParseError("residue must be a hex string");
  return FromHex(j.get_ref<const std::string&>());
}

const Json& Array(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (size != 0 && j.size() != size) {
    throw ParseError(std::string(what) + " must have " + std::to_string(size) + " elements");
  }
  return j;
}

void ExpectLevel(const Json& j, int level) {
  if (Unsigned(Field(j, "level"), "level") != static_cast<std::uint64_t>(level)) {
    throw ParseError("expected a level-" + std::to_string(level) + " node");
  }
}

Ciphertext ParseCt(const Json& j) {
  Array(j, 2, "ciphertext");
  return {Hex(j[0]), Hex(j[1])};
}

Level0 ParseLevel0(const Json& j) {
  ExpectLevel(j, 0);
  Level0 l0;
  l0.key_index = Vertex(Field(j, "key"));
  const Json& pairs = Array(Field(j, "pairs"), 4, "level-0 pairs");
  for (std::size_t i = 0; i < 4; ++i) {
    Array(pairs[i], 2, "ciphertext pair");
    l0.pairs[i] = {ParseCt(pairs[i][0]), ParseCt(pairs[i][1])};
  }
  return l0;
}

Level1 ParseLevel1(const Json& j) {
  ExpectLevel(j, 1);
  Level1 l1;
  for (const Json& e : Array(Field(j, "entries"), 0, "level-1 entries")) {
    l1.entries.push_back(ParseLevel0(e));
  }
  return l1;
}

Level2 ParseLevel2(const Json& j) {
  ExpectLevel(j, 2);
  Level2 l2;
  const Json& pairs = Array(Field(j, "pairs"), 4, "level-2 pairs");
  for (std::size_t i = 0; i < 4; ++i) {
    Array(pairs[i], 2, "level-2 pair");
    l2.pairs[i] = {ParseLevel1(pairs[i][0]), ParseLevel1(pairs[i][1])};
  }
  return l2;
}

Level3 ParseLevel3(const Json& j) {
  ExpectLevel(j, 3);
  const Json& entries = Array(Field(j, "entries"), 2, "level-3 entries");
  return Level3{{ParseLevel2(entries[0]), ParseLevel2(entries[1])}};
}

EncodedDelta ParseDelta(const Json& j) {
  const Json& bits = Array(Field(j, "bits"), 3, "delta bits");
  EncodedDelta delta;
  for (std::size_t m = 0; m < 3; ++m) delta.bits[m] = ParseLevel3(bits[m]);
  return delta;
}

PublicKey ParsePublicKey(const Json& j) {
  return PublicKey{GroupParams{Hex(Field(j, "q")), Hex(Field(j, "p")), Hex(Field(j, "g"))},
                   Hex(Field(j, "h"))};
}

std::string Text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Message ParsePayload(std::string_view type, const Json& p) {
  if (type == "announce_graph") {
    AnnounceGraph m;
    m.vertices = Unsigned(Field(p, "vertices"), "vertices");
    for (const Json& e : Array(Field(p, "edges"), 0, "edges")) {
      Array(e, 2, "edge");
      m.edges.emplace_back(Vertex(e[0]), Vertex(e[1]));
    }
    return m;
  }
  if (type == "encrypted_angle") {
    EncryptedAngle m;
    m.vertex = Vertex(Field(p, "vertex"));
    const bool plain = p.contains("plain");
    if (plain == p.contains("delta")) {
      throw ParseError("encrypted_angle needs exactly one of 'plain' and 'delta'");
    }
    if (plain) {
      const auto k = Unsigned(p["plain"], "angle index");
      if (k > 7) throw ParseError("angle index must be 0..7");
      m.angle = AngleIndex(static_cast<int>(k));
    } else {
      m.angle = ParseDelta(p["delta"]);
    }
    return m;
  }
  if (type == "key_and_result") {
    KeyAndResult m;
    m.vertex = Vertex(Field(p, "vertex"));
    m.pk = ParsePublicKey(Field(p, "pk"));
    m.result.key_index = Vertex(Field(p, "key_index"));
    const Json& result = Array(Field(p, "result"), 2, "result");
    m.result.first = ParseCt(result[0]);
    m.result.second = ParseCt(result[1]);
    return m;
  }
  if (type == "trap_reveal") {
    TrapReveal m;
    for (const Json& t : Array(Field(p, "traps"), 0, "traps")) m.traps.push_back(Vertex(t));
    for (const Json& e : Array(Field(p, "expected"), 0, "expected")) {
      Array(e, 2, "expected entry");
      m.expected.emplace_back(Vertex(e[0]), BitValue(e[1]));
    }
    return m;
  }
  if (type == "secret_keys") {
    SecretKeys m;
    for (const Json& e : Array(Field(p, "keys"), 0, "keys")) {
      Array(e, 2, "key entry");
      m.keys.emplace_back(Vertex(e[0]), SecretKey{Hex(e[1])});
    }
    return m;
  }
  if (type == "abort") return Abort{Text(Field(p, "reason"), "reason")};
  if (type == "dispute") return Dispute{Text(Field(p, "claim"), "claim")};
  throw ParseError("unknown message type '" + std::string(type) + "'");
}

}  // namespace

std::string SerializeTranscript(const Transcript& transcript) {
  const Json session = {{"session_id", transcript.session.session_id},
                        {"key_bits", transcript.session.key_bits},
                        {"vertices", transcript.session.vertices}};
  // One message per line keeps the files diffable.
  std::string out = "{\"format\":" + Json(kTranscriptFormat).dump() +
                    ",\n\"session\":" + session.dump() + ",\n\"messages\":[";
  for (std::size_t i = 0; i < transcript.messages.size(); ++i) {
    const Envelope& env = transcript.messages[i];
    const Json msg = {{"seq", env.seq},
                      {"sender", SenderName(env.sender)},
                      {"type", MessageType(env.message)},
                      {"payload", PayloadJson(env.message)}};
    out += i == 0 ? "\n" : ",\n";
    out += msg.dump();
  }
  out += "\n]}\n";
  return out;
}

Transcript ParseTranscript(std::string_view text) {
  try {
    const Json root = Json::parse(text.begin(), text.end());
    if (Text(Field(root, "format"), "format") != kTranscriptFormat) {
      throw ParseError("unsupported transcript format");
    }
    Transcript t;
    const Json& session = Field(root, "session");
    t.session.session_id = Text(Field(session, "session_id"), "session_id");
    const auto key_bits = Unsigned(Field(session, "key_bits"), "key_bits");
    if (key_bits > 1u << 20) throw ParseError("key_bits out of range");
    t.session.key_bits = static_cast<unsigned>(key_bits);
    t.session.vertices = Unsigned(Field(session, "vertices"), "vertices");
    for (const Json& m : Array(Field(root, "messages"), 0, "messages")) {
      Envelope env;
      env.seq = Unsigned(Field(m, "seq"), "seq");
      const std::string sender = Text(Field(m, "sender"), "sender");
      if (sender == "alice") {
        env.sender = Sender::kAlice;
      } else if (sender == "bob") {
        env.sender = Sender::kBob;
      } else {
        throw ParseError("unknown sender '" + sender + "'");
      }
      env.message = ParsePayload(Text(Field(m, "type"), "type"), Field(m, "payload"));
      t.messages.push_back(std::move(env));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("transcript is not valid JSON: ") + e.what());
  }
}

}  // namespace pvbqc::protocol
