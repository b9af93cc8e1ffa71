// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Monte Carlo over protocol sessions.

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "pvbqc/protocol/session.hpp"

namespace pvbqc::experiment {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct Interval {
  double low = 0.0;
  double high = 1.0;

  bool Contains(double x) const { return low <= x && x <= high; }
};

// Wilson score interval for `successes` out of `trials` (trials >= 1).
Interval Wilson(std::uint64_t successes, std::uint64_t trials, double z = kWilsonZ95);

// PVBQC_WORKERS if set to a positive integer, else the hardware concurrency.
std::size_t WorkerCount();

// Calls body(i) for i in [0, count) on `workers` threads. The first
// exception thrown by any call is rethrown after all threads stop.
void ParallelFor(std::size_t count, std::size_t workers,
                 const std::function<void(std::size_t)>& body);

struct Stats {
  std::string strategy;
  std::uint64_t trials = 0;
  std::uint64_t detections = 0;     // Alice rejected
  std::uint64_t wrong_accepts = 0;  // accepted an outcome other than the reference
  std::uint64_t disagreements = 0;  // third-party judgment differs from Alice
  std::uint64_t target_traps = 0;   // sessions whose deviation hit a trap

  double rate() const { return trials ? static_cast<double>(detections) / trials : 0.0; }
  Interval interval() const { return Wilson(detections, trials); }
};

// Seed of trial i.
std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t trial);

// Runs `trials` sessions of `base` with seeds TrialSeed(base.seed, i). Every
// transcript is also judged by the verifier.
Stats Estimate(const protocol::SessionConfig& base, std::uint64_t trials,
               std::size_t workers);

// {"strategy":..,"trials":..,"detections":..,"rate":..,"wilson_low":..,...}
std::string StatsJsonLine(const Stats& stats);

}  // namespace pvbqc::experiment
