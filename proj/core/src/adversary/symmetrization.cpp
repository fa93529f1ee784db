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

#include "bgc/adversary/symmetrization.hpp"

#include <string>

#include "bgc/errors.hpp"

namespace bgc {

LinearSolveOutcome symmetrization_system(const DecodingMatrix& b, std::span<const std::size_t> attack_set,
                                         const FieldElement& lambda) {
  const std::size_t m = b.combining.cols();
  if (lambda.modulus() != b.combining.modulus()) throw ModulusMismatch("lambda in another field");
  for (auto j : attack_set) {
    if (j >= b.combining.rows()) throw DimensionError("attack set names a nonexistent worker");
  }
  Matrix rhs(m, 1, b.combining.modulus());
  for (std::size_t k = 0; k < m; ++k) rhs(k, 0) = lambda;
  return solve_linear(b.combining.select_rows(attack_set).transpose(), rhs);
}

std::optional<Matrix> symmetrization_attack(const CodeContext& ctx, const DecodingMatrix& b,
                                            std::span<const std::size_t> attack_set,
                                            std::size_t dimension, const FieldElement& lambda) {
  if (b.combining.rows() != ctx.n()) {
    throw DimensionError("decoding matrix has " + std::to_string(b.combining.rows()) +
                         " rows, expected n = " + std::to_string(ctx.n()));
  }
  const LinearSolveOutcome outcome = symmetrization_system(b, attack_set, lambda);
  if (outcome.kind == SolveKind::kInconsistent) return std::nullopt;
  Matrix errors(dimension, ctx.n(), ctx.modulus());
  for (std::size_t k = 0; k < attack_set.size(); ++k) {
    for (std::size_t row = 0; row < dimension; ++row) {
      errors(row, attack_set[k]) = (*outcome.solution)(k, 0);
    }
  }
  return errors;
}

std::optional<std::vector<std::size_t>> choose_attack_set(const DecodingMatrix& b,
                                                          std::span<const std::size_t> preference,
                                                          std::size_t budget) {
  const std::uint64_t q = b.combining.modulus();
  std::vector<std::size_t> chosen;
  std::size_t current_rank = 0;
  for (auto j : preference) {
    if (chosen.size() == budget) break;
    chosen.push_back(j);
    const std::size_t next = rank(b.combining.select_rows(chosen));
    if (next == current_rank) {
      chosen.pop_back();
    } else {
      current_rank = next;
    }
  }
  if (chosen.empty()) return std::nullopt;
  const Matrix ones = Matrix::row(Vector(b.combining.cols(), FieldElement::one(q)));
  if (!row_span_contains(b.combining.select_rows(chosen), ones)) return std::nullopt;
  return chosen;
}

}  // namespace bgc
