// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pvbqc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Search budgets and capacity limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvalidCiphertext : public Error {
 public:
  using Error::Error;
};

// An inattentive-evaluation tree that does not decode to a well-formed value.
class MalformedEncoding : public Error {
 public:
  using Error::Error;
};

class InvalidFlow : public Error {
 public:
  using Error::Error;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (transcript, graph or config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pvbqc
