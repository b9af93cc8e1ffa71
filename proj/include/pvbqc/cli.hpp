// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace pvbqc::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flags, config, IO or parse errors
inline constexpr int kExitBobWithheldOrCheated = 3;
inline constexpr int kExitInvalidTranscript = 4;

inline constexpr unsigned kDefaultKeyBits = 256;
// Monte Carlo runs thousands of sessions; small keys keep them quick.
inline constexpr unsigned kEstimateKeyBits = 32;

// Entry point of the pvbqc tool: subcommands run, verify, estimate and
// keygen-bench.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pvbqc::cli
