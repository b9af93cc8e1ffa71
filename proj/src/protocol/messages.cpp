// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/protocol/messages.hpp"

namespace pvbqc::protocol {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

std::string_view SenderName(Sender sender) {
  return sender == Sender::kAlice ? "alice" : "bob";
}

std::string_view MessageType(const Message& message) {
  return std::visit(Overloaded{
                        [](const AnnounceGraph&) { return std::string_view("announce_graph"); },
                        [](const EncryptedAngle&) { return std::string_view("encrypted_angle"); },
                        [](const KeyAndResult&) { return std::string_view("key_and_result"); },
                        [](const TrapReveal&) { return std::string_view("trap_reveal"); },
                        [](const SecretKeys&) { return std::string_view("secret_keys"); },
                        [](const Abort&) { return std::string_view("abort"); },
                        [](const Dispute&) { return std::string_view("dispute"); },
                    },
                    message);
}

void StripRecipes(EncodedDelta& delta) {
  for (Level3& l3 : delta.bits) {
    for (Level2& l2 : l3.entries) {
      for (auto& pair : l2.pairs) {
        for (Level1& l1 : pair) {
          for (Level0& l0 : l1.entries) l0.recipe.reset();
        }
      }
    }
  }
}

}  // namespace pvbqc::protocol
