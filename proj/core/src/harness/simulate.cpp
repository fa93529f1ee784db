// Copyright 2026 The bgc Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#include "bgc/harness/simulate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>

#include "bgc/adversary/strategies.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/protocol.hpp"

namespace bgc {

namespace {

// Independent streams derived from the run seed.
constexpr std::uint64_t kGradientStream = 0x6a09e667f3bcc908ULL;
constexpr std::uint64_t kControlStream = 0xbb67ae8584caa73bULL;
constexpr std::uint64_t kNoiseStream = 0x3c6ef372fe94f82bULL;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::size_t> draw_controlled(const SimulationConfig& config) {
  std::vector<std::size_t> workers(config.n);
  std::iota(workers.begin(), workers.end(), 0);
  auto rng = stream(config.seed, kControlStream);
  std::shuffle(workers.begin(), workers.end(), rng);
  workers.resize(std::min(config.s, config.n));
  std::sort(workers.begin(), workers.end());
  return workers;
}

}  // namespace

AssignmentMatrix make_assignment(const SimulationConfig& config) {
  const std::size_t rho = config.s + config.u;
  switch (config.assignment) {
    case AssignmentKind::kCyclic: return make_cyclic(config.n, config.p, rho);
    case AssignmentKind::kFractional: return make_fractional(config.n, config.p, rho);
    case AssignmentKind::kRandomRegular:
      return make_random_regular(config.n, config.p, rho, config.seed);
    case AssignmentKind::kFile: {
      std::ifstream in(config.assignment_file);
      if (!in) throw InvalidParams("cannot open assignment file " + config.assignment_file);
      AssignmentMatrix a = read_assignment(in);
      if (a.workers() != config.n || a.samples() != config.p || a.replication() != rho) {
        throw InvalidParams("assignment file does not match n, p and s+u");
      }
      if (!validate_regular(a, rho)) throw InvalidParams("assignment file is not regular");
      return a;
    }
  }
  throw InvalidParams("unknown assignment kind");
}

Matrix make_gradients(const SimulationConfig& config) {
  auto rng = stream(config.seed, kGradientStream);
  std::uniform_int_distribution<std::uint64_t> dist(0, config.q - 1);
  Matrix g(config.d, config.p, config.q);
  for (std::size_t row = 0; row < config.d; ++row) {
    for (std::size_t i = 0; i < config.p; ++i) g(row, i) = FieldElement(dist(rng), config.q);
  }
  return g;
}

std::unique_ptr<AdversaryStrategy> make_adversary(const SimulationConfig& config,
                                                  const CodeContext& code) {
  const AdversarySpec& spec = config.adversary;
  auto controlled = [&] { return spec.controlled.value_or(draw_controlled(config)); };
  auto noise_seed = [&] {
    auto rng = stream(config.seed, kNoiseStream);
    return rng();
  };
  switch (spec.kind) {
    case AdversaryKind::kHonest: return make_honest();
    case AdversaryKind::kRandomAlways:
      return make_random_corruption(controlled(), noise_seed(), Persistence::kAlways);
    case AdversaryKind::kRandomInitialOnly:
      return make_random_corruption(controlled(), noise_seed(), Persistence::kInitialOnly);
    case AdversaryKind::kRandomCoin:
      return make_random_corruption(controlled(), noise_seed(), Persistence::kPerQueryCoin);
    case AdversaryKind::kTournamentLiar: {
      LiePlan plan = spec.plan;
      if (plan.mode == LieMode::kInconsistent && plan.seed == 0) plan.seed = noise_seed();
      return make_tournament_liar(controlled(), plan);
    }
    case AdversaryKind::kWorkedExample: {
      LiePlan plan;
      plan.target = 0;
      plan.delta = spec.plan.delta;
      plan.levels = {1};
      return make_tournament_liar(spec.controlled.value_or(std::vector<std::size_t>{2}), plan);
    }
    case AdversaryKind::kSymmetrization: return make_symmetrization_strategy(code, spec.lambda);
  }
  throw InvalidParams("unknown adversary kind");
}

SimulationOutcome simulate(const SimulationConfig& config) {
  validate(config);
  const CodeContext code = CodeContext::build(config.n, config.s, config.u, config.q);
  const AssignmentMatrix assignment = make_assignment(config);
  GradientOracle oracle(make_gradients(config));
  auto adversary = make_adversary(config, code);

  SimulationOutcome out;
  out.expected = oracle.full_gradient();
  RunMetrics& m = out.metrics;
  m.n = config.n;
  m.s = config.s;
  m.u = config.u;
  m.p = config.p;
  m.d = config.d;
  m.q = config.q;
  m.assignment = to_string(config.assignment);
  m.adversary = to_string(config.adversary.kind);
  m.seed = config.seed;

  ProtocolConfig protocol;
  protocol.grouping.order = config.grouping;
  protocol.grouping.seed = config.seed;
  try {
    ProtocolResult result = run_protocol(code, assignment, oracle, *adversary, protocol);
    out.transcript = std::move(result.transcript);
    const Transcript& t = out.transcript;
    m.correct = result.gradient == out.expected;
    m.c = t.local_computations;
    m.c_oh = t.communication_overhead;
    m.rounds = t.interactive_rounds();
    m.downlink_bits = t.downlink_bits;
    for (auto j : t.eliminated) m.eliminated.push_back(j + 1);
    m.within_bounds = within_bounds(t, theorem_bounds(code, config.p));
  } catch (const AdversaryBudgetExceeded& e) {
    m.error = e.what();
  } catch (const ProtocolInvariantViolation& e) {
    m.error = e.what();
  }
  return out;
}

SimulationOutcome simulate_to_files(const SimulationConfig& config) {
  SimulationOutcome out = simulate(config);
  if (!config.transcript_path.empty() && out.metrics.error.empty()) {
    std::ofstream os(config.transcript_path);
    if (!os) throw InvalidParams("cannot write transcript " + config.transcript_path);
    write_jsonl(os, out.transcript);
  }
  if (!config.metrics_path.empty()) {
    std::ofstream os(config.metrics_path);
    if (!os) throw InvalidParams("cannot write metrics " + config.metrics_path);
    write_csv(os, std::span<const RunMetrics>(&out.metrics, 1));
  }
  return out;
}

}  // namespace bgc
