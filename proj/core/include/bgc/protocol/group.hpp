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
#include <vector>

namespace bgc {

// A set of r+1 workers whose responses jointly decode any queried sum.
struct Group {
  std::vector<std::size_t> members;

  bool contains(std::size_t worker) const;
  friend bool operator==(const Group&, const Group&) = default;
};

// Groups sharing a common root: groups[k] = root + {satellites[k]}.
struct GroupingPlan {
  std::vector<std::size_t> root;
  std::vector<std::size_t> satellites;

  std::vector<Group> groups() const;
  Group group(std::size_t k) const;
  std::size_t size() const { return satellites.size(); }
};

}  // namespace bgc
