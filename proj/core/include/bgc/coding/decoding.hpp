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

#include <vector>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/protocol/group.hpp"

namespace bgc {

// Combining vector b of a group of r+1 workers, as a length-n vector that is
// zero outside the group: b restricted to the group is F_{., group}^{-1} e_{r+1},
// with entries 1 / prod_{l in group, l != j} (w_j - w_l).
Vector combining_vector(const CodeContext& ctx, const Group& group);

// B = (b_1, ..., b_m), one column per group. Independent of the query.
struct DecodingMatrix {
  std::vector<Group> groups;
  Matrix combining;  // n x m
};

DecodingMatrix build_decoding_matrix(const CodeContext& ctx, const std::vector<Group>& groups);

}  // namespace bgc
