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
#include <span>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"

namespace bgc {

// Vandermonde matrix with one row per evaluation point and one column per
// power 0..powers-1: V(i, k) = points[i]^k.
Matrix vandermonde(std::span<const FieldElement> points, std::size_t powers);

// Closed-form entries 1 / prod_{m != j} (x_j - x_m).
//
// This is the last row of inverse(vandermonde(points, len)), equivalently the
// last column of the inverse of its transpose (the power-by-point layout used
// for generator matrices). Throws SingularMatrix on repeated points.
Vector vandermonde_last_column_of_inverse(std::span<const FieldElement> points);

// Determinant of the (k+1) x (k+1) matrix with entries 1 / (zetas[j] - deltas[i])
// in its first k columns and ones in the last column. All 2k+1 inputs must be
// pairwise distinct (DegenerateInput otherwise); the result is then nonzero.
FieldElement cauchy_like_det(std::span<const FieldElement> zetas,
                             std::span<const FieldElement> deltas);

}  // namespace bgc
