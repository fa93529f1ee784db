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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/protocol/group.hpp"

namespace bgc {

// One query/answer step of an elimination match.
struct MatchLevelRecord {
  std::size_t level = 0;
  SampleRange node;     // range whose label is disputed
  SampleRange queried;  // left child, the range actually asked for
  std::vector<std::size_t> workers;
  std::vector<FieldElement> responses;  // aligned with workers
  std::array<FieldElement, 2> left_claims;
  std::array<FieldElement, 2> right_claims;  // inferred from the parent
  bool descend_left = true;
};

// A worker's commitment on the disputed leaf.
struct WorkerClaim {
  std::size_t worker = 0;
  bool assigned = false;
  FieldElement committed;  // its share of the leaf label, W(i, j) * claimed g_i
  FieldElement claimed;    // committed / W(i, j) if assigned, committed otherwise
  bool truthful = true;
};

struct MatchResult {
  std::size_t leaf = 0;
  Vector truth;  // locally computed g_leaf
  std::vector<WorkerClaim> claims;
  std::vector<std::size_t> malicious;
  std::vector<MatchLevelRecord> levels;
};

struct Conflict {
  std::size_t first = 0;   // group indices, first < second
  std::size_t second = 0;
  std::size_t coordinate = 0;
};

struct RoundRecord {
  std::size_t round = 0;
  std::size_t unidentified = 0;  // s_t
  GroupingPlan plan;
  std::vector<Vector> group_values;
  std::optional<Conflict> conflict;
  std::optional<MatchResult> match;
};

enum class DecodePath { kAgreement, kErrorCorrection };

// Full record of one protocol run. Counters follow the figures of merit:
// initial responses are not part of the communication overhead.
struct Transcript {
  std::size_t n = 0, s = 0, u = 0, r = 0, p = 0, d = 0;
  std::uint64_t q = 0;
  Vector points;
  std::string assignment_text;

  Matrix initial_responses;  // d x n, as received
  std::vector<RoundRecord> rounds;

  DecodePath path = DecodePath::kAgreement;
  Vector gradient;
  std::size_t local_computations = 0;
  std::size_t communication_overhead = 0;
  std::size_t downlink_bits = 0;
  std::vector<std::size_t> eliminated;

  // Rounds in which an elimination tournament was played.
  std::size_t interactive_rounds() const;
};

// JSON Lines, one event per line:
//   config, query, response-set (initial), then per round decode [, conflict,
//   per level query / response-set / match-level, local-compute, elimination],
//   optionally a decode record for the error-correction path, and final.
// Workers and samples are 1-based in the output.
void write_jsonl(std::ostream& os, const Transcript& t);
std::string to_jsonl(const Transcript& t);

struct ReplayResult {
  Vector recomputed;
  Vector recorded;
  bool matches = false;
};

// Rebuilds the code from the config record and recomputes the final gradient
// from the recorded initial responses: through the last group decode on the
// agreement path, through ecc_decode with the recorded eliminations otherwise.
ReplayResult replay_transcript(std::istream& is);

}  // namespace bgc
