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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgc/adversary/strategies.hpp"
#include "bgc/algebra/field.hpp"
#include "bgc/protocol/grouping.hpp"

namespace bgc {

enum class AssignmentKind { kCyclic, kFractional, kRandomRegular, kFile };

enum class AdversaryKind {
  kHonest,
  kRandomAlways,
  kRandomInitialOnly,
  kRandomCoin,
  kTournamentLiar,
  kWorkedExample,
  kSymmetrization,
};

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::kHonest;
  // 0-based. When absent, s workers are drawn with the run seed.
  std::optional<std::vector<std::size_t>> controlled;
  std::int64_t lambda = 1;
  LiePlan plan = [] {
    LiePlan lies;
    lies.all_levels = true;
    return lies;
  }();
};

struct SimulationConfig {
  std::size_t n = 3;
  std::size_t s = 1;
  std::size_t u = 1;
  std::size_t p = 3;
  std::size_t d = 1;
  std::uint64_t q = kDefaultModulus;
  AssignmentKind assignment = AssignmentKind::kCyclic;
  std::string assignment_file;
  AdversarySpec adversary;
  std::uint64_t seed = 0;
  GroupingOrder grouping = GroupingOrder::kLowestIndex;
  std::string transcript_path;
  std::string metrics_path;
};

std::string to_string(AssignmentKind kind);
std::string to_string(AdversaryKind kind);
AssignmentKind parse_assignment_kind(std::string_view name);
AdversaryKind parse_adversary_kind(std::string_view name);
std::vector<std::string> adversary_names();

// JSON object text; unknown keys are rejected, missing keys keep `base`.
SimulationConfig parse_config(const std::string& json_text, SimulationConfig base = {});
SimulationConfig load_config(const std::string& path, SimulationConfig base = {});

// BGC_SEED when set and numeric, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 0);

// Throws InvalidParams naming the first violated constraint.
void validate(const SimulationConfig& config);

// Three workers, cyclic layout, W3 lying once.
SimulationConfig worked_example_config();

}  // namespace bgc
