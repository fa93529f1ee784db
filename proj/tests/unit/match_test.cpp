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

#include <gtest/gtest.h>

#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/decoding.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/protocol.hpp"
#include "generators.hpp"

namespace bgc {
namespace {

// Worker j's honest tournament answer for coordinate c over `range`.
FieldElement honest_answer(const Matrix& g, const EncodingMatrix& w, const Query& query,
                           std::size_t j) {
  FieldElement acc = FieldElement::zero(g.modulus());
  for (std::size_t i = query.range.begin; i < query.range.end; ++i) {
    acc += g(*query.coordinate, i) * w.coefficients(i, j);
  }
  return acc;
}

struct Scenario {
  CodeContext code;
  AssignmentMatrix assignment;
  EncodingMatrix encoding;
  Matrix gradients;
};

Scenario scenario(std::size_t n, std::size_t s, std::size_t u, std::size_t p, std::size_t d,
                  std::uint64_t q, std::uint64_t seed) {
  gen::Gen g(seed);
  auto code = CodeContext::build(n, s, u, q);
  auto a = make_cyclic(n, p, s + u);
  auto w = build_encoding_matrix(code, a, Vector(p, FieldElement::one(q)));
  return {std::move(code), std::move(a), std::move(w), g.matrix(d, p, q)};
}

TEST(ContradictionTest, Agreement) {
  const Vector v = make_vector({1, 2}, 7);
  const auto out = detect_contradiction({v, v, v});
  ASSERT_TRUE(std::holds_alternative<Agreement>(out));
  EXPECT_EQ(std::get<Agreement>(out).value, v);
}

TEST(ContradictionTest, TwoGroupsDiffer) {
  const auto out = detect_contradiction({make_vector({1, 2}, 7), make_vector({1, 3}, 7)});
  ASSERT_TRUE(std::holds_alternative<Conflict>(out));
  const auto c = std::get<Conflict>(out);
  EXPECT_EQ(c.first, 0u);
  EXPECT_EQ(c.second, 1u);
  EXPECT_EQ(c.coordinate, 1u);
}

TEST(ContradictionTest, LowestPairTieBreak) {
  const Vector a = make_vector({4}, 7), b = make_vector({5}, 7);
  const auto out = detect_contradiction({a, a, b});
  const auto c = std::get<Conflict>(out);
  EXPECT_EQ(c.first, 0u);
  EXPECT_EQ(c.second, 2u);
  EXPECT_THROW(detect_contradiction({}), DimensionError);
}

TEST(GroupResponseTest, HonestGroupsDecodeTheSum) {
  const auto sc = scenario(3, 1, 1, 3, 2, 7, 91);
  const Matrix z = response_matrix(sc.gradients, sc.encoding);
  const Vector truth = sc.gradients * Vector(3, FieldElement::one(7));
  for (const auto& members : {std::vector<std::size_t>{0, 2}, std::vector<std::size_t>{1, 2}}) {
    EXPECT_EQ(group_response(z, combining_vector(sc.code, Group{members})), truth);
  }
}

TEST(GroupResponseTest, ErrorWeightsDifferAcrossGroups) {
  const std::uint64_t q = 7;
  const auto sc = scenario(3, 1, 1, 3, 1, q, 92);
  Matrix z = response_matrix(sc.gradients, sc.encoding);
  z(0, 2) += FieldElement(1, q);
  const Vector b1 = combining_vector(sc.code, Group{{0, 2}});
  const Vector b2 = combining_vector(sc.code, Group{{1, 2}});
  EXPECT_NE(b1[2], b2[2]);
  EXPECT_NE(group_response(z, b1), group_response(z, b2));
}

TEST(RunMatchTest, SingleSampleLeafIsRoot) {
  const std::uint64_t q = kDefaultModulus;
  const auto sc = scenario(2, 1, 1, 1, 1, q, 93);
  const MatchTree tree(1);
  GradientOracle oracle(sc.gradients);
  std::vector<FieldElement> committed;
  for (std::size_t j = 0; j < 2; ++j) committed.push_back(worker_response(sc.gradients, sc.encoding, j)[0]);
  committed[1] += FieldElement::one(q);
  const MatchSetup setup{sc.code, sc.assignment, sc.encoding, Group{{0}}, Group{{1}},
                         0, 1, committed};
  const auto result = run_match(setup, tree, [&](const Query&, std::size_t) -> FieldElement {
    ADD_FAILURE() << "no queries expected";
    return FieldElement::zero(q);
  }, oracle);
  EXPECT_TRUE(result.levels.empty());
  EXPECT_EQ(result.leaf, 0u);
  EXPECT_EQ(result.malicious, (std::vector<std::size_t>{1}));
  EXPECT_EQ(oracle.calls(), 1u);
}

TEST(RunMatchTest, SingleLeafLieFoundInThreeLevels) {
  const std::uint64_t q = kDefaultModulus;
  const std::size_t n = 6, s = 2, u = 1, p = 8;
  const auto sc = scenario(n, s, u, p, 2, q, 94);
  const std::size_t liar = 4, target = 5, coordinate = 1;
  ASSERT_TRUE(sc.assignment(liar, target));
  const FieldElement delta(77, q);
  const FieldElement shift = sc.encoding.coefficients(target, liar) * delta;

  std::vector<FieldElement> committed;
  for (std::size_t j = 0; j < n; ++j) {
    committed.push_back(worker_response(sc.gradients, sc.encoding, j)[coordinate]);
  }
  committed[liar] += shift;
  const MatchTree tree(p);
  GradientOracle oracle(sc.gradients);
  const MatchSetup setup{sc.code,         sc.assignment, sc.encoding, Group{{0, 1, 2, 3}},
                         Group{{0, 1, 2, 4}}, coordinate,  1,           committed};
  std::size_t asked = 0;
  const auto result = run_match(setup, tree, [&](const Query& query, std::size_t j) {
    ++asked;
    EXPECT_EQ(query.kind, QueryKind::kTournament);
    EXPECT_EQ(*query.coordinate, coordinate);
    FieldElement answer = honest_answer(sc.gradients, sc.encoding, query, j);
    if (j == liar && query.range.contains(target)) answer += shift;
    return answer;
  }, oracle);
  EXPECT_EQ(result.leaf, target);
  EXPECT_EQ(result.levels.size(), 3u);
  EXPECT_EQ(asked, (sc.code.r() + 2) * 3);
  EXPECT_EQ(result.malicious, (std::vector<std::size_t>{liar}));
  EXPECT_EQ(result.truth, sc.gradients.column_vector(target));
  for (const auto& claim : result.claims) {
    if (claim.worker == liar) {
      EXPECT_EQ(claim.claimed, sc.gradients(coordinate, target) + delta);
    } else if (claim.assigned) {
      EXPECT_EQ(claim.claimed, sc.gradients(coordinate, target));
    } else {
      EXPECT_TRUE(claim.claimed.is_zero());
    }
  }
}

TEST(RunMatchTest, SiblingInferenceIsExact) {
  const std::uint64_t q = 101;
  const auto sc = scenario(5, 2, 1, 7, 1, q, 95);
  std::vector<FieldElement> committed;
  for (std::size_t j = 0; j < 5; ++j) committed.push_back(worker_response(sc.gradients, sc.encoding, j)[0]);
  committed[3] += FieldElement(9, q);
  GradientOracle oracle(sc.gradients);
  const MatchSetup setup{sc.code, sc.assignment, sc.encoding, Group{{0, 1, 3}}, Group{{0, 1, 4}},
                         0, 1, committed};
  const auto result = run_match(setup, MatchTree(7), [&](const Query& query, std::size_t j) {
    return honest_answer(sc.gradients, sc.encoding, query, j);
  }, oracle);
  auto range_sum = [&](std::size_t begin, std::size_t end) {
    FieldElement acc = FieldElement::zero(q);
    for (std::size_t i = begin; i < end; ++i) acc += sc.gradients(0, i);
    return acc;
  };
  ASSERT_FALSE(result.levels.empty());
  for (const auto& level : result.levels) {
    // The second group is all honest, so its claims are the true interval sums.
    EXPECT_EQ(level.left_claims[1], range_sum(level.queried.begin, level.queried.end));
    EXPECT_EQ(level.right_claims[1], range_sum(level.queried.end, level.node.end));
    EXPECT_NE(level.descend_left ? level.left_claims[0] : level.right_claims[0],
              level.descend_left ? level.left_claims[1] : level.right_claims[1]);
  }
  EXPECT_EQ(result.malicious, (std::vector<std::size_t>{3}));
}

TEST(RunMatchTest, AgreeingGroupsAreAnInvariantViolation) {
  const std::uint64_t q = kDefaultModulus;
  const auto sc = scenario(4, 1, 1, 4, 1, q, 96);
  std::vector<FieldElement> committed;
  for (std::size_t j = 0; j < 4; ++j) committed.push_back(worker_response(sc.gradients, sc.encoding, j)[0]);
  GradientOracle oracle(sc.gradients);
  const MatchSetup setup{sc.code, sc.assignment, sc.encoding, Group{{0, 1, 2}}, Group{{0, 1, 3}},
                         0, 1, committed};
  EXPECT_THROW(run_match(setup, MatchTree(4), [&](const Query& query, std::size_t j) {
    return honest_answer(sc.gradients, sc.encoding, query, j);
  }, oracle), ProtocolInvariantViolation);
}

TEST(GradientOracleTest, CountsCalls) {
  const Matrix g = Matrix::from_rows(7, {{1, 2, 3}, {4, 5, 6}});
  GradientOracle oracle(g);
  EXPECT_EQ(oracle.local_compute(1), make_vector({2, 5}, 7));
  EXPECT_EQ(oracle.calls(), 1u);
  oracle.local_compute(0);
  EXPECT_EQ(oracle.calls(), 2u);
  EXPECT_EQ(oracle.full_gradient(), make_vector({6, 1}, 7));
  EXPECT_THROW(oracle.local_compute(3), DimensionError);
}

}  // namespace
}  // namespace bgc
