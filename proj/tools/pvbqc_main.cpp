// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "pvbqc/cli.hpp"

int main(int argc, char** argv) { return pvbqc::cli::Main(argc, argv, std::cout, std::cerr); }
