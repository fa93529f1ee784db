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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "bgc/adversary/strategy.hpp"
#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/protocol/group.hpp"
#include "bgc/protocol/grouping.hpp"
#include "bgc/protocol/match_tree.hpp"
#include "bgc/protocol/query.hpp"
#include "bgc/protocol/transcript.hpp"

namespace bgc {

// Ground truth for the partial gradients G (d x p). The main node only
// touches it through local_compute(), which is counted.
class GradientOracle {
 public:
  explicit GradientOracle(Matrix gradients);

  const Matrix& gradients() const { return gradients_; }
  std::size_t dimension() const { return gradients_.rows(); }
  std::size_t samples() const { return gradients_.cols(); }

  Vector local_compute(std::size_t sample);
  std::size_t calls() const { return calls_; }

  // G * 1, for checking results.
  Vector full_gradient() const;

 private:
  Matrix gradients_;
  std::size_t calls_ = 0;
};

// g_hat = Z * b for a combining vector b of length n.
Vector group_response(const Matrix& responses, const Vector& combining);

struct Agreement {
  Vector value;
};

using ContradictionResult = std::variant<Agreement, Conflict>;

// Agreement iff all values are equal; otherwise the first group paired with
// the lowest-index group that differs from it, and the first coordinate
// where those two differ.
ContradictionResult detect_contradiction(const std::vector<Vector>& values);

// Returns the single symbol worker `worker` transmits for `query`.
using Responder = std::function<FieldElement(const Query& query, std::size_t worker)>;

struct MatchSetup {
  const CodeContext& code;
  const AssignmentMatrix& assignment;
  const EncodingMatrix& encoding;  // W^(1)
  Group first;
  Group second;
  std::size_t coordinate = 0;
  std::size_t round = 1;
  // Coordinate `coordinate` of each worker's initial response, indexed by worker.
  std::vector<FieldElement> committed;
};

// Walks the match tree from the root to a leaf on which the two groups
// disagree, querying the left child at every level and inferring the right
// child from the parent, then locally computes that leaf and returns every
// worker whose commitment contradicts it.
MatchResult run_match(const MatchSetup& setup, const MatchTree& tree, const Responder& responder,
                      GradientOracle& oracle);

struct ProtocolConfig {
  GroupingOptions grouping;
};

struct ProtocolResult {
  Vector gradient;
  Transcript transcript;
};

// The main node's state machine: decode with the error-correcting code once at
// most u-1 malicious workers can remain unidentified, otherwise compare s_t+1
// groups, output on agreement, or play one elimination match and repeat.
//
// Throws AdversaryBudgetExceeded if the observed behaviour is impossible with
// at most s malicious workers.
ProtocolResult run_protocol(const CodeContext& code, const AssignmentMatrix& assignment,
                            GradientOracle& oracle, AdversaryStrategy& adversary,
                            const ProtocolConfig& config = {});

struct TheoremBounds {
  std::size_t max_local_computations;
  std::size_t max_communication_overhead;
  std::size_t max_rounds;
};

// c <= s+1-u, C_oh <= (r+2)(s+1-u) ceil(log2 p), rounds <= s+1-u.
TheoremBounds theorem_bounds(const CodeContext& code, std::size_t samples);
bool within_bounds(const Transcript& t, const TheoremBounds& bounds);

}  // namespace bgc
