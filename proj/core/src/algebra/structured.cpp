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

#include "bgc/algebra/structured.hpp"

#include <string>

#include "bgc/errors.hpp"

namespace bgc {

Matrix vandermonde(std::span<const FieldElement> points, std::size_t powers) {
  if (points.empty()) throw DimensionError("vandermonde: no points");
  const std::uint64_t q = points.front().modulus();
  Matrix v(points.size(), powers, q);
  for (std::size_t i = 0; i < points.size(); ++i) {
    FieldElement x = FieldElement::one(q);
    for (std::size_t k = 0; k < powers; ++k) {
      v.set(i, k, x);
      x *= points[i];
    }
  }
  return v;
}

Vector vandermonde_last_column_of_inverse(std::span<const FieldElement> points) {
  if (points.empty()) throw DimensionError("vandermonde_last_column_of_inverse: no points");
  const std::uint64_t q = points.front().modulus();
  Vector out;
  out.reserve(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElement denom = FieldElement::one(q);
    for (std::size_t m = 0; m < points.size(); ++m) {
      if (m == j) continue;
      const FieldElement diff = points[j] - points[m];
      if (diff.is_zero()) {
        throw SingularMatrix("repeated evaluation point " + std::to_string(points[j].value()));
      }
      denom *= diff;
    }
    out.push_back(ff_inv(denom));
  }
  return out;
}

FieldElement cauchy_like_det(std::span<const FieldElement> zetas,
                             std::span<const FieldElement> deltas) {
  const std::size_t k = zetas.size();
  if (deltas.size() != k + 1) {
    throw DimensionError("cauchy_like_det: need k+1 deltas for k zetas, got " +
                         std::to_string(deltas.size()));
  }
  const std::uint64_t q = deltas.front().modulus();

  std::vector<FieldElement> all(zetas.begin(), zetas.end());
  all.insert(all.end(), deltas.begin(), deltas.end());
  for (std::size_t a = 0; a < all.size(); ++a) {
    if (all[a].modulus() != q) throw ModulusMismatch("cauchy_like_det: mixed fields");
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (all[a] == all[b]) {
        throw DegenerateInput("cauchy_like_det: inputs not pairwise distinct (value " +
                              std::to_string(all[a].value()) + ")");
      }
    }
  }

  Matrix m(k + 1, k + 1, q);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = ff_inv(zetas[j] - deltas[i]);
    m(i, k) = FieldElement::one(q);
  }
  return determinant(std::move(m));
}

}  // namespace bgc
