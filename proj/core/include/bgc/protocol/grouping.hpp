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
#include <span>

#include "bgc/protocol/group.hpp"

namespace bgc {

enum class GroupingOrder {
  kLowestIndex,    // root = lowest r active workers, satellites = the next s_t+1
  kSeededShuffle,  // same construction on a seeded permutation of the active workers
};

struct GroupingOptions {
  GroupingOrder order = GroupingOrder::kLowestIndex;
  std::uint64_t seed = 0;
  std::size_t round = 1;
};

// Builds s_t+1 groups of size r+1 that pairwise intersect exactly in a shared
// root of r workers. `active` lists the non-eliminated workers.
// Throws InfeasibleState when fewer than r + s_t + 1 workers are active.
GroupingPlan form_groups(std::span<const std::size_t> active, std::size_t r,
                         std::size_t unidentified, const GroupingOptions& options = {});

}  // namespace bgc
