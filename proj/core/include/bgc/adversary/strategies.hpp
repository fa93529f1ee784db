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
#include <memory>
#include <optional>
#include <vector>

#include "bgc/adversary/strategy.hpp"

namespace bgc {

enum class Persistence {
  kAlways,        // corrupt every answer
  kInitialOnly,   // corrupt the initial response, answer tournaments honestly
  kPerQueryCoin,  // corrupt each answer with probability 1/2
};

enum class LieMode {
  kConsistent,    // keep pretending g_target was shifted by delta
  kInconsistent,  // add fresh random noise
};

struct LiePlan {
  std::optional<std::size_t> target;  // 0-based sample; defaults to each worker's first sample
  std::int64_t delta = 1;
  std::vector<std::size_t> levels;    // 1-based tournament levels to lie at
  bool all_levels = false;
  LieMode mode = LieMode::kConsistent;
  std::uint64_t seed = 0;

  bool lies_at(std::size_t level) const;
};

std::unique_ptr<AdversaryStrategy> make_honest();

std::unique_ptr<AdversaryStrategy> make_random_corruption(std::vector<std::size_t> controlled,
                                                          std::uint64_t seed,
                                                          Persistence persistence);

std::unique_ptr<AdversaryStrategy> make_tournament_liar(std::vector<std::size_t> controlled,
                                                        LiePlan plan);

// Controls the satellites of the first s lowest-index groups and corrupts the
// initial responses so those s groups decode the same wrong value.
std::unique_ptr<AdversaryStrategy> make_symmetrization_strategy(const CodeContext& code,
                                                                std::int64_t lambda = 1);

}  // namespace bgc
