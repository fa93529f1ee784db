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
#include <string>
#include <vector>

#include "bgc/harness/config.hpp"
#include "bgc/harness/metrics.hpp"

namespace bgc {

struct SweepGrid {
  std::vector<std::size_t> n, s, p, d;
  std::vector<std::size_t> u;  // empty: 1..min(s+1, n-s)
  std::vector<AssignmentKind> assignments;
  std::vector<AdversaryKind> adversaries;
  std::size_t seeds = 1;
  std::uint64_t base_seed = 0;
  std::uint64_t q = kDefaultModulus;
};

struct RejectedRow {
  std::size_t n = 0, s = 0, u = 0, p = 0, d = 0;
  std::string assignment;
  std::string reason;
};

struct SweepReport {
  std::vector<RunMetrics> runs;
  std::vector<RejectedRow> rejected;
  MetricsSummary summary;
  std::vector<std::string> failures;  // one line per incorrect or out-of-bounds run
};

// Parameter grid for the bound-check suite.
SweepGrid theorem_grid();

SweepGrid parse_grid(const std::string& json_text);
SweepGrid load_grid(const std::string& path);

// Runs are ordered as the cartesian product regardless of `threads`.
// threads == 0 picks the hardware concurrency.
SweepReport run_sweep(const SweepGrid& grid, std::size_t threads = 0);

void write_rejected_csv(std::ostream& os, const std::vector<RejectedRow>& rows);

}  // namespace bgc
