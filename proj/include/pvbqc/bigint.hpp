// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pvbqc {

using BigInt = mpz_class;

// Lowercase big-endian hex without prefix or leading zeros ("0" for zero).
std::string ToHex(const BigInt& value);

// Inverse of ToHex. Accepts only the canonical form; throws ParseError.
BigInt FromHex(std::string_view hex);

}  // namespace pvbqc
