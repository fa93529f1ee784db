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

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"

namespace bgc {

// Half-open range [begin, end) of 0-based sample indices.
struct SampleRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return begin <= i && i < end; }
  friend bool operator==(const SampleRange&, const SampleRange&) = default;
};

// 0/1 vector of length p that is one exactly on `range`.
Vector indicator(SampleRange range, std::size_t p, std::uint64_t modulus);

// Encoding matrix W^(a) (p x n) for the query vector a. Column j holds the
// coefficients worker j applies to its partial gradients; W(i, j) == 0
// whenever worker j does not hold sample i.
struct EncodingMatrix {
  Vector query;
  Matrix coefficients;

  std::size_t samples() const { return coefficients.rows(); }
  std::size_t workers() const { return coefficients.cols(); }
};

// Solves, for every sample i, (q_i^T | a_i) F_{., I_i} = 0 where I_i are the r
// workers without sample i, and returns W = (Q | a) F.
//
// Throws AssignmentMismatch when A is not regular with replication s+u or its
// shape does not match the context, DimensionError when a has the wrong length.
EncodingMatrix build_encoding_matrix(const CodeContext& ctx, const AssignmentMatrix& a,
                                     const Vector& query);

// W^(1) restricted to a 0/1 query: rows outside the mask become zero. Equal to
// build_encoding_matrix on the indicator vector, without solving anything.
EncodingMatrix restrict_encoding(const EncodingMatrix& full, const std::vector<bool>& mask);
EncodingMatrix restrict_encoding(const EncodingMatrix& full, SampleRange range);

// Honest response of worker j: G * W(., j), a vector of length d.
Vector worker_response(const Matrix& gradients, const EncodingMatrix& w, std::size_t worker);

// All honest responses at once: Z = G * W (d x n).
Matrix response_matrix(const Matrix& gradients, const EncodingMatrix& w);

}  // namespace bgc
