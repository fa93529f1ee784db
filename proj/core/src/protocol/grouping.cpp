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

#include "bgc/protocol/grouping.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bgc/errors.hpp"

namespace bgc {

bool Group::contains(std::size_t worker) const {
  return std::find(members.begin(), members.end(), worker) != members.end();
}

Group GroupingPlan::group(std::size_t k) const {
  Group g{root};
  g.members.push_back(satellites.at(k));
  return g;
}

std::vector<Group> GroupingPlan::groups() const {
  std::vector<Group> out;
  out.reserve(satellites.size());
  for (std::size_t k = 0; k < satellites.size(); ++k) out.push_back(group(k));
  return out;
}

GroupingPlan form_groups(std::span<const std::size_t> active, std::size_t r,
                         std::size_t unidentified, const GroupingOptions& options) {
  const std::size_t needed = r + unidentified + 1;
  if (active.size() < needed) {
    throw InfeasibleState("grouping needs r + s_t + 1 = " + std::to_string(needed) +
                          " active workers, only " + std::to_string(active.size()) + " left");
  }
  std::vector<std::size_t> order(active.begin(), active.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw InfeasibleState("active worker list contains duplicates");
  }
  if (options.order == GroupingOrder::kSeededShuffle) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + options.round);
    std::shuffle(order.begin(), order.end(), rng);
  }

  GroupingPlan plan;
  plan.root.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r));
  plan.satellites.assign(order.begin() + static_cast<std::ptrdiff_t>(r),
                         order.begin() + static_cast<std::ptrdiff_t>(needed));
  return plan;
}

}  // namespace bgc
