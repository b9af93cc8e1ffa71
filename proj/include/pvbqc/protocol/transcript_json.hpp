// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Transcript file format:
//
//   {"format":"pvbqc-transcript/1",
//    "session":{"session_id":..,"key_bits":..,"vertices":..},
//    "messages":[{"seq":0,"sender":"alice","type":"announce_graph","payload":{..}}, ...]}
//
// Residues are lowercase hex strings, angle indices integers 0-7. Output is
// byte-stable: equal transcripts serialize to equal bytes.

#pragma once

#include <string>
#include <string_view>

#include "pvbqc/protocol/messages.hpp"

namespace pvbqc::protocol {

inline constexpr std::string_view kTranscriptFormat = "pvbqc-transcript/1";

std::string SerializeTranscript(const Transcript& transcript);

// Throws ParseError on anything that does not follow the schema.
Transcript ParseTranscript(std::string_view text);

}  // namespace pvbqc::protocol
