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

#include "bgc/coding/encoding.hpp"

#include <string>

#include "bgc/errors.hpp"

namespace bgc {

Vector indicator(SampleRange range, std::size_t p, std::uint64_t modulus) {
  if (range.begin > range.end || range.end > p) {
    throw DimensionError("indicator: range outside [0, p)");
  }
  Vector v = zero_vector(p, modulus);
  for (std::size_t i = range.begin; i < range.end; ++i) v[i] = FieldElement::one(modulus);
  return v;
}

EncodingMatrix build_encoding_matrix(const CodeContext& ctx, const AssignmentMatrix& a,
                                     const Vector& query) {
  const std::size_t n = ctx.n();
  const std::size_t p = a.samples();
  const std::size_t r = ctx.r();
  const std::uint64_t q = ctx.modulus();
  if (a.workers() != n) {
    throw AssignmentMismatch("assignment has " + std::to_string(a.workers()) +
                             " workers, code context has " + std::to_string(n));
  }
  if (query.size() != p) {
    throw DimensionError("query length " + std::to_string(query.size()) + " != p=" +
                         std::to_string(p));
  }
  if (!validate_regular(a, ctx.replication())) {
    throw AssignmentMismatch("assignment is not regular with replication s+u=" +
                             std::to_string(ctx.replication()));
  }

  const Matrix& f = ctx.generator();
  std::vector<std::size_t> top_rows(r);
  for (std::size_t k = 0; k < r; ++k) top_rows[k] = k;

  EncodingMatrix out{query, Matrix(p, n, q)};
  for (std::size_t i = 0; i < p; ++i) {
    if (query[i].modulus() != q) throw ModulusMismatch("query over a different field");
    const auto zero_set = a.unassigned_workers(i);
    if (zero_set.size() != r) {
      throw AssignmentMismatch("sample " + std::to_string(i + 1) + " is missing from " +
                               std::to_string(zero_set.size()) + " workers, expected r=" +
                               std::to_string(r));
    }

    // Coefficients (q_i^T | a_i) of length r+1.
    Vector coeffs = zero_vector(r + 1, q);
    coeffs[r] = query[i];
    if (r > 0) {
      const Matrix f_zero = f.select_columns(zero_set);
      const Matrix top = f_zero.select_rows(top_rows);
      // q_i^T top + a_i F(r, I_i) = 0, i.e. top^T q_i = -a_i F(r, I_i)^T.
      Matrix rhs(r, 1, q);
      for (std::size_t k = 0; k < r; ++k) rhs(k, 0) = -(query[i] * f_zero(r, k));
      const auto solved = solve_linear(top.transpose(), rhs);
      if (solved.kind != SolveKind::kUnique) {
        throw ProtocolInvariantViolation("encoding system for sample " + std::to_string(i + 1) +
                                         " is not uniquely solvable");
      }
      for (std::size_t k = 0; k < r; ++k) coeffs[k] = (*solved.solution)(k, 0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement acc = FieldElement::zero(q);
      for (std::size_t k = 0; k <= r; ++k) acc += coeffs[k] * f(k, j);
      out.coefficients(i, j) = acc;
    }
  }
  return out;
}

EncodingMatrix restrict_encoding(const EncodingMatrix& full, const std::vector<bool>& mask) {
  const std::size_t p = full.samples();
  if (mask.size() != p) throw DimensionError("restrict_encoding: mask length != p");
  for (const auto& x : full.query) {
    if (x.value() != 1) throw InvalidParams("restrict_encoding needs W built for the all-one query");
  }
  const std::uint64_t q = full.coefficients.modulus();
  EncodingMatrix out{zero_vector(p, q), full.coefficients};
  for (std::size_t i = 0; i < p; ++i) {
    if (mask[i]) {
      out.query[i] = FieldElement::one(q);
      continue;
    }
    for (std::size_t j = 0; j < full.workers(); ++j) out.coefficients(i, j) = FieldElement::zero(q);
  }
  return out;
}

EncodingMatrix restrict_encoding(const EncodingMatrix& full, SampleRange range) {
  std::vector<bool> mask(full.samples(), false);
  if (range.begin > range.end || range.end > full.samples()) {
    throw DimensionError("restrict_encoding: range outside [0, p)");
  }
  for (std::size_t i = range.begin; i < range.end; ++i) mask[i] = true;
  return restrict_encoding(full, mask);
}

Vector worker_response(const Matrix& gradients, const EncodingMatrix& w, std::size_t worker) {
  if (gradients.cols() != w.samples()) {
    throw DimensionError("worker_response: G has " + std::to_string(gradients.cols()) +
                         " columns, W has " + std::to_string(w.samples()) + " rows");
  }
  if (worker >= w.workers()) throw DimensionError("worker_response: worker out of range");
  return gradients * w.coefficients.column_vector(worker);
}

Matrix response_matrix(const Matrix& gradients, const EncodingMatrix& w) {
  return gradients * w.coefficients;
}

}  // namespace bgc
