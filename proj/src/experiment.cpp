// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pvbqc/errors.hpp"
#include "pvbqc/verifier.hpp"

namespace pvbqc::experiment {

Interval Wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw InvalidArgument("Wilson interval needs at least one trial");
  if (successes > trials) throw InvalidArgument("more successes than trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  // The closed form is exact at the ends; rounding is not.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

std::size_t WorkerCount() {
  if (const char* env = std::getenv("PVBQC_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count, std::size_t workers,
                 const std::function<void(std::size_t)>& body) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  const auto run = [&] {
    for (std::size_t i; !stop && (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t trial) {
  return DeriveSeed(master, 0x1000 + trial);
}

Stats Estimate(const protocol::SessionConfig& base, std::uint64_t trials,
               std::size_t workers) {
  if (trials == 0) throw InvalidArgument("trials must be positive");
  struct Outcome {
    bool rejected = false;
    bool wrong_accept = false;
    bool disagree = false;
    bool trap_hit = false;
  };
  std::vector<Outcome> outcomes(trials);
  ParallelFor(trials, workers, [&](std::size_t i) {
    protocol::SessionConfig config = base;
    config.seed = TrialSeed(base.seed, i);
    const protocol::SessionResult r = protocol::RunSession(config);
    const auto judgment = verifier::Judge(r.transcript);
    const bool judged_accept = judgment.verdict == verifier::Verdict::kAcceptedOutcome;
    Outcome& o = outcomes[i];
    o.rejected = !r.verdict.accepted;
    o.wrong_accept = r.WrongAccept();
    o.disagree = judged_accept != r.verdict.accepted;
    o.trap_hit = r.target &&
                 std::find(r.traps.begin(), r.traps.end(), *r.target) != r.traps.end();
  });
  Stats stats;
  stats.strategy = protocol::StrategyName(base.strategy);
  stats.trials = trials;
  for (const Outcome& o : outcomes) {
    stats.detections += o.rejected;
    stats.wrong_accepts += o.wrong_accept;
    stats.disagreements += o.disagree;
    stats.target_traps += o.trap_hit;
  }
  return stats;
}

std::string StatsJsonLine(const Stats& stats) {
  const Interval ci = stats.interval();
  const nlohmann::ordered_json line = {
      {"strategy", stats.strategy},
      {"trials", stats.trials},
      {"detections", stats.detections},
      {"rate", stats.rate()},
      {"wilson_low", ci.low},
      {"wilson_high", ci.high},
      {"wrong_accepts", stats.wrong_accepts},
      {"verifier_disagreements", stats.disagreements},
      {"target_on_trap", stats.target_traps},
  };
  return line.dump();
}

}  // namespace pvbqc::experiment
