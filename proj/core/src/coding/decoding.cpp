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

#include "bgc/coding/decoding.hpp"

#include <string>

#include "bgc/algebra/structured.hpp"
#include "bgc/errors.hpp"

namespace bgc {

Vector combining_vector(const CodeContext& ctx, const Group& group) {
  if (group.members.size() != ctx.r() + 1) {
    throw DimensionError("group of size " + std::to_string(group.members.size()) +
                         ", expected r+1=" + std::to_string(ctx.r() + 1));
  }
  Vector points;
  points.reserve(group.members.size());
  for (auto j : group.members) {
    if (j >= ctx.n()) throw DimensionError("group member out of range");
    points.push_back(ctx.point(j));
  }
  // Repeated members surface as repeated points (SingularMatrix).
  const Vector local = vandermonde_last_column_of_inverse(points);
  Vector b = zero_vector(ctx.n(), ctx.modulus());
  for (std::size_t k = 0; k < group.members.size(); ++k) b[group.members[k]] = local[k];
  return b;
}

DecodingMatrix build_decoding_matrix(const CodeContext& ctx, const std::vector<Group>& groups) {
  DecodingMatrix out{groups, Matrix(ctx.n(), groups.size(), ctx.modulus())};
  for (std::size_t k = 0; k < groups.size(); ++k) {
    out.combining.set_column(k, combining_vector(ctx, groups[k]));
  }
  return out;
}

}  // namespace bgc
