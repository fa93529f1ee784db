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
#include <optional>

#include "bgc/coding/encoding.hpp"

namespace bgc {

enum class QueryKind {
  kInitial,     // all-one query, full d-dimensional response from every worker
  kTournament,  // sum over one sample range, a single coordinate per worker
};

// What the main node asks the workers for. The encoding is always W^(1)
// restricted to `range`.
struct Query {
  QueryKind kind = QueryKind::kInitial;
  std::size_t round = 0;  // 0 for the initial responses
  std::size_t level = 0;  // 1-based tournament level, 0 for the initial responses
  SampleRange range;
  std::optional<std::size_t> coordinate;  // set for tournament queries
};

}  // namespace bgc
