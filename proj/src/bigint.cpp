// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/bigint.hpp"

#include "pvbqc/errors.hpp"

namespace pvbqc {

std::string ToHex(const BigInt& value) { return value.get_str(16); }

BigInt FromHex(std::string_view hex) {
  if (hex.empty() || hex.size() > 4096) {
    throw ParseError("hex integer has invalid length");
  }
  if (hex.size() > 1 && hex.front() == '0') {
    throw ParseError("hex integer has leading zeros");
  }
  for (char c : hex) {
    bool digit = c >= '0' && c <= '9';
    bool lower = c >= 'a' && c <= 'f';
    if (!digit && !lower) throw ParseError("hex integer has invalid digit");
  }
  return BigInt(std::string(hex), 16);
}

}  // namespace pvbqc
