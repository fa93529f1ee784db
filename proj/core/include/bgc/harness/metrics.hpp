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
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bgc {

struct RunMetrics {
  std::size_t n = 0, s = 0, u = 0, p = 0, d = 0;
  std::uint64_t q = 0;
  std::string assignment;
  std::string adversary;
  std::uint64_t seed = 0;
  bool correct = false;
  std::size_t c = 0;
  std::size_t c_oh = 0;
  std::size_t rounds = 0;
  std::size_t downlink_bits = 0;
  std::vector<std::size_t> eliminated;  // 1-based
  bool within_bounds = false;
  std::string error;                    // empty unless the run threw
};

std::string csv_header();
std::string csv_row(const RunMetrics& m);
void write_csv(std::ostream& os, std::span<const RunMetrics> runs);

struct MetricsSummary {
  std::size_t runs = 0;
  std::size_t incorrect = 0;
  std::size_t bound_violations = 0;
  std::size_t max_c = 0, max_c_oh = 0, max_rounds = 0, max_downlink_bits = 0;
  double mean_c = 0, mean_c_oh = 0, mean_rounds = 0, mean_downlink_bits = 0;

  bool clean() const { return incorrect == 0 && bound_violations == 0; }
};

MetricsSummary summarize(std::span<const RunMetrics> runs);
std::ostream& operator<<(std::ostream& os, const MetricsSummary& summary);

}  // namespace bgc
