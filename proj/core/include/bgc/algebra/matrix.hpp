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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bgc/algebra/field.hpp"

namespace bgc {

// Dense row-major matrix over F_q. All entries share the matrix modulus.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  static Matrix identity(std::size_t size, std::uint64_t modulus);
  static Matrix from_rows(std::uint64_t modulus,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  // Checked element write; rejects elements of another field.
  void set(std::size_t r, std::size_t c, const FieldElement& x);

  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  void set_row(std::size_t r, const Vector& v);

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  // Horizontal concatenation (this | rhs).
  Matrix augment(const Matrix& rhs) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<FieldElement> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Reduced row echelon form computed in place with first-nonzero pivoting.
// Returns the pivot column of each pivot row, in row order.
std::vector<std::size_t> reduce_to_rref(Matrix& m);

std::size_t rank(Matrix m);
FieldElement determinant(Matrix m);

// Throws SingularMatrix when `m` is not invertible, DimensionError when not square.
Matrix inverse(const Matrix& m);

enum class SolveKind { kUnique, kUnderdetermined, kInconsistent };

struct LinearSolveOutcome {
  SolveKind kind = SolveKind::kInconsistent;
  // Present unless kind == kInconsistent. For kUnderdetermined this is the
  // particular solution with all free variables set to zero.
  std::optional<Matrix> solution;
  // True iff the echelon form of (coeffs | rhs) has a pivot in an rhs column.
  bool pivot_in_augmented_last_column = false;
};

// Solves coeffs * X = rhs for X; rhs may have several columns, in which case
// the system is inconsistent as soon as one column is.
LinearSolveOutcome solve_linear(const Matrix& coeffs, const Matrix& rhs);

// True iff target_row (1 x cols) is a linear combination of the rows of mat.
bool row_span_contains(const Matrix& mat, const Matrix& target_row);

}  // namespace bgc
