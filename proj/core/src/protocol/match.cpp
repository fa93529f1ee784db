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

#include <algorithm>
#include <string>
#include <utility>

#include "bgc/coding/decoding.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/protocol.hpp"

namespace bgc {

namespace {

FieldElement combine(const std::vector<FieldElement>& values, const Vector& combining,
                     const Group& group, std::uint64_t q) {
  FieldElement acc = FieldElement::zero(q);
  for (auto j : group.members) acc += combining[j] * values[j];
  return acc;
}

}  // namespace

GradientOracle::GradientOracle(Matrix gradients) : gradients_(std::move(gradients)) {}

Vector GradientOracle::local_compute(std::size_t sample) {
  if (sample >= samples()) {
    throw DimensionError("local_compute: sample " + std::to_string(sample + 1) +
                         " out of range");
  }
  ++calls_;
  return gradients_.column_vector(sample);
}

Vector GradientOracle::full_gradient() const {
  return gradients_ * Vector(samples(), FieldElement::one(gradients_.modulus()));
}

Vector group_response(const Matrix& responses, const Vector& combining) {
  return responses * combining;
}

ContradictionResult detect_contradiction(const std::vector<Vector>& values) {
  if (values.empty()) throw DimensionError("detect_contradiction needs at least one response");
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] == values[0]) continue;
    if (values[k].size() != values[0].size()) {
      throw DimensionError("detect_contradiction: responses of different lengths");
    }
    std::size_t c = 0;
    while (values[k][c] == values[0][c]) ++c;
    return Conflict{0, k, c};
  }
  return Agreement{values[0]};
}

MatchResult run_match(const MatchSetup& setup, const MatchTree& tree, const Responder& responder,
                      GradientOracle& oracle) {
  const CodeContext& code = setup.code;
  const std::uint64_t q = code.modulus();
  const std::size_t n = code.n();
  if (setup.committed.size() != n) {
    throw DimensionError("run_match: need one committed value per worker");
  }
  if (tree.samples() != setup.encoding.samples()) {
    throw DimensionError("run_match: tree and encoding disagree on p");
  }

  const Vector b_first = combining_vector(code, setup.first);
  const Vector b_second = combining_vector(code, setup.second);

  std::vector<std::size_t> competitors = setup.first.members;
  competitors.insert(competitors.end(), setup.second.members.begin(), setup.second.members.end());
  std::sort(competitors.begin(), competitors.end());
  competitors.erase(std::unique(competitors.begin(), competitors.end()), competitors.end());

  std::vector<FieldElement> committed = setup.committed;
  if (combine(committed, b_first, setup.first, q) == combine(committed, b_second, setup.second, q)) {
    throw ProtocolInvariantViolation("run_match: groups agree on the root label");
  }

  MatchResult result;
  const MatchTree::Node* node = &tree.root();
  std::size_t level = 0;
  while (!node->is_leaf()) {
    ++level;
    const MatchTree::Node& left = tree.left(*node);
    const MatchTree::Node& right = tree.right(*node);
    Query query{QueryKind::kTournament, setup.round, level, left.range, setup.coordinate};

    MatchLevelRecord rec;
    rec.level = level;
    rec.node = node->range;
    rec.queried = left.range;
    rec.workers = competitors;

    std::vector<FieldElement> left_values(n, FieldElement::zero(q));
    std::vector<FieldElement> right_values(n, FieldElement::zero(q));
    for (auto j : competitors) {
      const FieldElement answer = responder(query, j);
      if (answer.modulus() != q) throw ModulusMismatch("worker answered in a different field");
      rec.responses.push_back(answer);
      left_values[j] = answer;
      right_values[j] = committed[j] - answer;
    }
    rec.left_claims = {combine(left_values, b_first, setup.first, q),
                       combine(left_values, b_second, setup.second, q)};
    rec.right_claims = {combine(right_values, b_first, setup.first, q),
                        combine(right_values, b_second, setup.second, q)};

    if (!(rec.left_claims[0] == rec.left_claims[1])) {
      rec.descend_left = true;
      committed = std::move(left_values);
      node = &left;
    } else if (!(rec.right_claims[0] == rec.right_claims[1])) {
      rec.descend_left = false;
      committed = std::move(right_values);
      node = &right;
    } else {
      throw ProtocolInvariantViolation("run_match: no disputed child below range [" +
                                       std::to_string(node->range.begin + 1) + ", " +
                                       std::to_string(node->range.end) + "]");
    }
    result.levels.push_back(std::move(rec));
  }

  const std::size_t leaf = node->range.begin;
  result.leaf = leaf;
  result.truth = oracle.local_compute(leaf);
  const FieldElement truth = result.truth.at(setup.coordinate);

  for (auto j : competitors) {
    WorkerClaim claim;
    claim.worker = j;
    claim.assigned = setup.assignment(j, leaf);
    claim.committed = committed[j];
    const FieldElement weight = setup.encoding.coefficients(leaf, j);
    if (claim.assigned) {
      if (weight.is_zero()) {
        throw ProtocolInvariantViolation("zero encoding coefficient for assigned worker " +
                                         std::to_string(j + 1) + " on sample " +
                                         std::to_string(leaf + 1));
      }
      claim.claimed = committed[j] / weight;
      claim.truthful = claim.claimed == truth;
    } else {
      claim.claimed = committed[j];
      claim.truthful = committed[j].is_zero();
    }
    if (!claim.truthful) result.malicious.push_back(j);
    result.claims.push_back(claim);
  }
  if (result.malicious.empty()) {
    throw ProtocolInvariantViolation("run_match: disputed leaf " + std::to_string(leaf + 1) +
                                     " but every claim matches the local computation");
  }
  return result;
}

}  // namespace bgc
