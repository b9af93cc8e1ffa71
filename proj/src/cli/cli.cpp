// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pvbqc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pvbqc/errors.hpp"
#include "pvbqc/experiment.hpp"
#include "pvbqc/mbqc.hpp"
#include "pvbqc/modgroup.hpp"
#include "pvbqc/protocol/session.hpp"
#include "pvbqc/protocol/transcript_json.hpp"
#include "pvbqc/verifier.hpp"

namespace pvbqc::cli {

namespace {

constexpr std::uint64_t kPatternStream = 5;

struct SessionOptions {
  std::string family = "path";
  std::size_t size = 4;
  std::string graph_file;
  std::size_t traps = 1;
  std::size_t dummy_degree = 1;
  unsigned key_bits = kDefaultKeyBits;
  bool shared_group = false;
  std::uint64_t seed = 1;
  std::optional<VertexId> target;
  int offset = 2;
};

void AddSessionOptions(CLI::App& cmd, SessionOptions& o) {
  cmd.add_option("--family", o.family, "Built-in graph family")
      ->check(CLI::IsMember({"path", "ladder"}))
      ->capture_default_str();
  cmd.add_option("--size", o.size, "Path length, or ladder columns")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd.add_option("--graph", o.graph_file, "Graph file; overrides --family");
  cmd.add_option("--traps", o.traps, "Number of trap vertices")->capture_default_str();
  cmd.add_option("--dummy-degree", o.dummy_degree, "Dummies per trap")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  cmd.add_option("--key-bits", o.key_bits, "Bit length of each key's subgroup order")
      ->check(CLI::Range(4, 4096))
      ->capture_default_str();
  cmd.add_flag("--shared-group", o.shared_group, "Use one group for every round");
  cmd.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd.add_option("--target", o.target, "Vertex Bob deviates at (default: uniform)");
  cmd.add_option("--offset", o.offset, "Angle offset for offset-angle, in pi/4")
      ->capture_default_str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ResourceError("cannot read " + path);
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw ResourceError("cannot write " + path);
}

Pattern BuildPattern(const SessionOptions& o) {
  if (!o.graph_file.empty()) return ParseGraphText(ReadFile(o.graph_file));
  SeededRng rng(DeriveSeed(o.seed, kPatternStream));
  if (o.family == "ladder") return DeterministicPattern(LadderGraph(o.size), rng);
  if (o.size < 2) throw InvalidArgument("a path needs at least two vertices");
  return DeterministicPath(o.size, rng);
}

protocol::SessionConfig MakeConfig(const SessionOptions& o, const Pattern& pattern,
                                   const std::string& strategy) {
  protocol::SessionConfig config;
  config.computation = pattern;
  config.traps = o.traps;
  config.dummy_degree = o.dummy_degree;
  config.key_bits = o.key_bits;
  config.shared_group = o.shared_group;
  config.seed = o.seed;
  config.strategy = protocol::ParseStrategy(strategy);
  config.strategy.target = o.target;
  config.strategy.offset = o.offset;
  return config;
}

std::string Bits(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s.empty() ? "-" : s;
}

int CmdRun(const SessionOptions& o, const std::string& strategy, bool free_rider,
           const std::string& transcript_path, const std::string& graph_out,
           std::ostream& out) {
  const Pattern pattern = BuildPattern(o);
  protocol::SessionConfig config = MakeConfig(o, pattern, strategy);
  config.free_rider = free_rider;
  const protocol::SessionResult r = protocol::RunSession(config);

  const std::string bytes = protocol::SerializeTranscript(r.transcript);
  WriteFile(transcript_path, bytes);
  if (!graph_out.empty()) {
    WriteFile(graph_out, FormatGraphText({r.graph, std::vector<AngleIndex>(r.graph.size())}));
  }
  const auto judgment = verifier::Judge(protocol::ParseTranscript(bytes));
  const bool deterministic = IsDeterministic(NormalizePattern(pattern));

  out << "session " << r.transcript.session.session_id << '\n';
  out << "vertices " << r.graph.size() << " (computation "
      << r.graph.VerticesWithRole(Role::kComputation).size() << ", traps " << r.traps.size()
      << ", dummies " << r.graph.VerticesWithRole(Role::kDummy).size() << ")\n";
  out << "strategy " << protocol::StrategyName(config.strategy);
  if (r.target) out << " at vertex " << *r.target;
  out << '\n';
  out << "bob: " << (r.bob_released_keys ? "released keys" : "withheld keys") << '\n';
  out << "alice: " << (r.verdict.accepted ? "accept" : "reject") << " ("
      << protocol::VerdictReasonName(r.verdict.reason) << ")\n";
  out << "verifier: " << verifier::VerdictName(judgment.verdict);
  if (!judgment.detail.empty()) out << " (" << judgment.detail << ')';
  out << '\n';
  out << "outcome " << (r.verdict.outcome ? Bits(*r.verdict.outcome) : "-") << ", reference "
      << Bits(r.ground_truth) << ": ";
  if (!r.verdict.outcome) {
    out << "no outcome";
  } else {
    out << (*r.verdict.outcome == r.ground_truth ? "match" : "mismatch");
  }
  if (!deterministic) out << " (pattern is not deterministic)";
  out << '\n';
  out << "transcript " << transcript_path << '\n';
  return kExitOk;
}

int CmdVerify(const std::string& path, std::ostream& out, std::ostream& err) {
  protocol::Transcript transcript;
  try {
    transcript = protocol::ParseTranscript(ReadFile(path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto judgment = verifier::Judge(transcript);
  out << verifier::FormatReport(judgment);
  switch (judgment.verdict) {
    case verifier::Verdict::kAcceptedOutcome: return kExitOk;
    case verifier::Verdict::kBobWithheldOrCheated: return kExitBobWithheldOrCheated;
    case verifier::Verdict::kInvalidTranscript: return kExitInvalidTranscript;
  }
  return kExitInvalidTranscript;
}

const std::vector<std::string> kAllStrategies = {
    "honest",          "flip-result",         "offset-angle",       "z-before-measure",
    "fake-secret-key", "malformed-pair-zero", "malformed-pair-one", "withhold-keys"};

int CmdEstimate(const SessionOptions& o, std::vector<std::string> strategies,
                std::uint64_t trials, std::size_t workers, const std::string& out_path,
                std::ostream& out) {
  if (trials < 100) throw InvalidArgument("estimate needs at least 100 trials");
  if (strategies.size() == 1 && strategies[0] == "all") strategies = kAllStrategies;
  const Pattern pattern = BuildPattern(o);
  std::string lines;
  for (const std::string& name : strategies) {
    const auto stats = experiment::Estimate(MakeConfig(o, pattern, name), trials, workers);
    lines += experiment::StatsJsonLine(stats) + '\n';
  }
  if (out_path.empty()) {
    out << lines;
  } else {
    WriteFile(out_path, lines);
  }
  return kExitOk;
}

int CmdKeygenBench(const std::vector<unsigned>& bits, std::size_t count, std::uint64_t seed,
                   std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  for (unsigned b : bits) {
    SeededRng rng(DeriveSeed(seed, b));
    double total = 0;
    double worst = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto start = Clock::now();
      const GroupParams group = GenGroup(b, rng);
      (void)KeyGen(group, rng);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      total += ms;
      worst = std::max(worst, ms);
    }
    const nlohmann::ordered_json line = {
        {"bits", b}, {"count", count}, {"mean_ms", total / count}, {"max_ms", worst}};
    out << line.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Publicly verifiable blind quantum computation simulator", "pvbqc"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  SessionOptions run_opts;
  std::string run_strategy = "honest";
  bool free_rider = false;
  std::string transcript_path = "transcript.json";
  std::string graph_out;
  auto* run = app.add_subcommand("run", "Run one session and write its transcript");
  AddSessionOptions(*run, run_opts);
  run->add_option("--strategy", run_strategy, "Bob's strategy")->capture_default_str();
  run->add_flag("--free-rider", free_rider, "Alice disputes the run afterwards");
  run->add_option("--transcript", transcript_path, "Transcript output path")
      ->capture_default_str();
  run->add_option("--graph-out", graph_out, "Write the full graph (with traps) here");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Judge a transcript as a third party");
  verify->add_option("transcript", verify_path, "Transcript file")->required();

  SessionOptions est_opts;
  est_opts.key_bits = kEstimateKeyBits;
  std::vector<std::string> est_strategies = {"all"};
  std::uint64_t trials = 2000;
  std::size_t workers = experiment::WorkerCount();
  std::string stats_path;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo detection rates");
  AddSessionOptions(*estimate, est_opts);
  estimate->add_option("--strategy", est_strategies, "Strategies, or 'all'")->delimiter(',');
  estimate->add_option("--trials", trials, "Sessions per strategy")->capture_default_str();
  estimate->add_option("--workers", workers, "Worker threads (env PVBQC_WORKERS)");
  estimate->add_option("--out", stats_path, "Write the JSON lines here instead of stdout");

  std::vector<unsigned> bench_bits = {16, 32, 64, 128, 256};
  std::size_t bench_count = 3;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("keygen-bench", "Time group and key generation");
  bench->add_option("--bits", bench_bits, "Key sizes")->delimiter(',')->check(CLI::Range(4, 4096));
  bench->add_option("--count", bench_count, "Keys per size")->check(CLI::Range(1, 100000));
  bench->add_option("--seed", bench_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run) {
      return CmdRun(run_opts, run_strategy, free_rider, transcript_path, graph_out, out);
    }
    if (*verify) return CmdVerify(verify_path, out, err);
    if (*estimate) {
      return CmdEstimate(est_opts, est_strategies, trials, workers, stats_path, out);
    }
    if (*bench) return CmdKeygenBench(bench_bits, bench_count, bench_seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pvbqc::cli
