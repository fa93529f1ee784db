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

#include "bgc/protocol/protocol.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "bgc/adversary/strategies.hpp"
#include "bgc/errors.hpp"
#include "generators.hpp"

namespace bgc {
namespace {

struct Run {
  ProtocolResult result;
  Vector truth;
};

Run run(const CodeContext& code, const AssignmentMatrix& a, const Matrix& g,
        AdversaryStrategy& adversary, const ProtocolConfig& config = {}) {
  GradientOracle oracle(g);
  const Vector truth = oracle.full_gradient();
  return {run_protocol(code, a, oracle, adversary, config), truth};
}

LiePlan three_worker_plan() {
  LiePlan plan;
  plan.target = 0;
  plan.levels = {1};
  return plan;
}

TEST(ProtocolTest, HonestRunAgreesImmediately) {
  gen::Gen g(101);
  const auto code = CodeContext::build(6, 2, 1);
  const auto a = make_cyclic(6, 9, 3);
  auto honest = make_honest();
  const auto out = run(code, a, g.matrix(3, 9, code.modulus()), *honest);
  const Transcript& t = out.result.transcript;
  EXPECT_EQ(out.result.gradient, out.truth);
  EXPECT_EQ(t.path, DecodePath::kAgreement);
  EXPECT_EQ(t.rounds.size(), 1u);
  EXPECT_EQ(t.local_computations, 0u);
  EXPECT_EQ(t.communication_overhead, 0u);
  EXPECT_EQ(t.interactive_rounds(), 0u);
  EXPECT_TRUE(t.eliminated.empty());
}

TEST(ProtocolTest, ThreeWorkerWorkedExample) {
  const std::uint64_t q = 7;
  const auto code = CodeContext::build(3, 1, 1, q);
  const auto a = make_cyclic(3, 3, 2);
  auto liar = make_tournament_liar({2}, three_worker_plan());
  const auto out = run(code, a, Matrix::from_rows(q, {{3, 6, 2}}), *liar);
  const Transcript& t = out.result.transcript;
  EXPECT_EQ(out.result.gradient, out.truth);
  EXPECT_EQ(t.eliminated, (std::vector<std::size_t>{2}));
  EXPECT_EQ(t.local_computations, 1u);
  EXPECT_EQ(t.communication_overhead, 6u);
  EXPECT_EQ(t.downlink_bits, 2u);
  EXPECT_EQ(t.interactive_rounds(), 1u);
  ASSERT_TRUE(t.rounds.front().conflict.has_value());
  EXPECT_EQ(t.rounds.front().conflict->first, 0u);
  EXPECT_EQ(t.rounds.front().conflict->second, 1u);
}

TEST(ProtocolTest, FullRedundancyUsesErrorCorrectionOnly) {
  gen::Gen g(102);
  for (std::size_t s = 1; s <= 3; ++s) {
    const std::size_t n = 2 * s + 2;
    const auto code = CodeContext::build(n, s, s + 1);
    const auto a = make_cyclic(n, n, 2 * s + 1);
    auto adversary = make_random_corruption(g.subset(n, s), g.next(), Persistence::kAlways);
    const auto out = run(code, a, g.matrix(2, n, code.modulus()), *adversary);
    const Transcript& t = out.result.transcript;
    EXPECT_EQ(out.result.gradient, out.truth);
    EXPECT_EQ(t.path, DecodePath::kErrorCorrection);
    EXPECT_TRUE(t.rounds.empty());
    EXPECT_EQ(t.local_computations, 0u);
    EXPECT_EQ(t.communication_overhead, 0u);
  }
}

TEST(ProtocolTest, BudgetOverrunIsReported) {
  const auto code = CodeContext::build(3, 1, 2);
  const auto a = make_cyclic(3, 3, 3);
  auto adversary = make_random_corruption({0, 1}, 5, Persistence::kAlways);
  GradientOracle oracle(Matrix::from_rows(code.modulus(), {{1, 2, 3}}));
  EXPECT_THROW(run_protocol(code, a, oracle, *adversary), AdversaryBudgetExceeded);
}

TEST(ProtocolTest, RejectsMismatchedInputs) {
  const auto code = CodeContext::build(4, 1, 1);
  auto honest = make_honest();
  GradientOracle wrong_p(Matrix(1, 5, code.modulus()));
  EXPECT_THROW(run_protocol(code, make_cyclic(4, 4, 2), wrong_p, *honest), DimensionError);
  GradientOracle wrong_q(Matrix(1, 4, 7));
  EXPECT_THROW(run_protocol(code, make_cyclic(4, 4, 2), wrong_q, *honest), ModulusMismatch);
  auto outside = make_random_corruption({9}, 1, Persistence::kAlways);
  GradientOracle fine(Matrix(1, 4, code.modulus()));
  EXPECT_THROW(run_protocol(code, make_cyclic(4, 4, 2), fine, *outside), InvalidParams);
}

// Soundness, resilience and the resource bounds over random instances and strategies.
TEST(ProtocolProperty, ResilientAndWithinBounds) {
  gen::Gen g(103);
  for (int trial = 0; trial < 600; ++trial) {
    const auto in = g.instance(8);
    const auto code = CodeContext::build(in.n, in.s, in.u, in.q);
    const auto a = g.assignment(in);
    const std::size_t budget = g.uniform(0, in.s);
    const auto controlled = g.subset(in.n, budget);
    std::unique_ptr<AdversaryStrategy> adversary;
    switch (trial % 6) {
      case 0: adversary = make_random_corruption(controlled, g.next(), Persistence::kAlways); break;
      case 1: adversary = make_random_corruption(controlled, g.next(), Persistence::kInitialOnly); break;
      case 2: adversary = make_random_corruption(controlled, g.next(), Persistence::kPerQueryCoin); break;
      case 3: {
        LiePlan plan;
        plan.all_levels = true;
        plan.delta = static_cast<std::int64_t>(g.uniform(1, 1000));
        adversary = make_tournament_liar(controlled, plan);
        break;
      }
      case 4: {
        LiePlan plan;
        plan.levels = {1, 3};
        plan.mode = LieMode::kInconsistent;
        plan.seed = g.next();
        adversary = make_tournament_liar(controlled, plan);
        break;
      }
      default: adversary = make_symmetrization_strategy(code); break;
    }
    ProtocolConfig config;
    if (trial % 2 == 1) config.grouping = {GroupingOrder::kSeededShuffle, g.next(), 1};
    const auto out = run(code, a, g.matrix(g.uniform(1, 3), in.p, in.q), *adversary, config);
    const Transcript& t = out.result.transcript;
    ASSERT_EQ(out.result.gradient, out.truth) << "trial " << trial;
    ASSERT_TRUE(within_bounds(t, theorem_bounds(code, in.p))) << "trial " << trial;
    for (auto j : t.eliminated) ASSERT_TRUE(adversary->controls(j)) << "honest worker eliminated";
    std::size_t found = 0;
    for (const auto& round : t.rounds) {
      if (!round.match) continue;
      EXPECT_GE(round.match->malicious.size(), 1u);
      EXPECT_EQ(round.unidentified, in.s - found);
      found += round.match->malicious.size();
      EXPECT_LE(round.match->levels.size(), ceil_log2(in.p));
    }
    EXPECT_EQ(found, t.eliminated.size());
    EXPECT_EQ(t.local_computations, t.interactive_rounds());
    EXPECT_EQ(t.downlink_bits * (code.r() + 2), t.communication_overhead);
  }
}

TEST(ProtocolProperty, PersistentCorruptionIdentifiedWithinBudget) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Gen g(seed);
    const auto in = g.instance(8);
    const auto code = CodeContext::build(in.n, in.s, in.u, in.q);
    auto adversary = make_random_corruption(g.subset(in.n, in.s), seed, Persistence::kAlways);
    const auto out = run(code, g.assignment(in), g.matrix(2, in.p, in.q), *adversary);
    EXPECT_EQ(out.result.gradient, out.truth);
    EXPECT_LE(out.result.transcript.interactive_rounds(), in.s + 1 - in.u);
  }
}

TEST(ProtocolProperty, Deterministic) {
  gen::Gen g(104);
  for (int trial = 0; trial < 30; ++trial) {
    const auto in = g.instance(7);
    const auto code = CodeContext::build(in.n, in.s, in.u, in.q);
    const auto a = g.assignment(in);
    const Matrix grad = g.matrix(2, in.p, in.q);
    const auto controlled = g.subset(in.n, in.s);
    const std::uint64_t seed = g.next();
    auto first = make_random_corruption(controlled, seed, Persistence::kPerQueryCoin);
    auto second = make_random_corruption(controlled, seed, Persistence::kPerQueryCoin);
    EXPECT_EQ(to_jsonl(run(code, a, grad, *first).result.transcript),
              to_jsonl(run(code, a, grad, *second).result.transcript));
  }
}

TEST(TheoremBoundsTest, Formula) {
  const auto code = CodeContext::build(7, 3, 1);
  const auto b = theorem_bounds(code, 9);
  EXPECT_EQ(b.max_local_computations, 3u);
  EXPECT_EQ(b.max_rounds, 3u);
  EXPECT_EQ(b.max_communication_overhead, (3u + 2u) * 3u * 4u);
  EXPECT_EQ(theorem_bounds(CodeContext::build(3, 1, 1, 7), 3).max_communication_overhead, 6u);
}

}  // namespace
}  // namespace bgc
