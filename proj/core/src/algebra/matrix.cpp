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

#include "bgc/algebra/matrix.hpp"

#include <string>
#include <utility>

#include "bgc/errors.hpp"

namespace bgc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows),
      cols_(cols),
      modulus_(modulus),
      entries_(rows * cols, FieldElement::zero(modulus)) {}

Matrix Matrix::identity(std::size_t size, std::uint64_t modulus) {
  Matrix m(size, size, modulus);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = FieldElement::one(modulus);
  return m;
}

Matrix Matrix::from_rows(std::uint64_t modulus,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c, modulus);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged initializer for Matrix");
    std::size_t j = 0;
    for (auto x : row) m(i, j++) = FieldElement::from_signed(x, modulus);
    ++i;
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  if (v.empty()) throw DimensionError("cannot infer modulus of an empty vector");
  Matrix m(v.size(), 1, v.front().modulus());
  m.set_column(0, v);
  return m;
}

Matrix Matrix::row(const Vector& v) {
  if (v.empty()) throw DimensionError("cannot infer modulus of an empty vector");
  Matrix m(1, v.size(), v.front().modulus());
  m.set_row(0, v);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& x) {
  if (x.modulus() != modulus_) throw ModulusMismatch("matrix entry from a different field");
  (*this)(r, c) = x;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size(), modulus_);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw DimensionError("select_columns: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, cols[k]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_, modulus_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw DimensionError("select_rows: index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(rows[k], c);
  }
  return out;
}

Matrix Matrix::augment(const Matrix& rhs) const {
  if (rhs.rows_ != rows_) throw DimensionError("augment: row count mismatch");
  if (rhs.modulus_ != modulus_) throw ModulusMismatch("augment: different fields");
  Matrix out(rows_, cols_ + rhs.cols_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  if (a.modulus() != b.modulus()) throw ModulusMismatch("matrix product over different fields");
  const std::uint64_t q = a.modulus();
  Matrix out(a.rows(), b.cols(), q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      // Accumulate raw residues; each product is < q^2 < 2^64, reduce per term.
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + (a(i, k).value() * b(k, j).value()) % q) % q;
      }
      out(i, j) = FieldElement(acc, q);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: length mismatch");
  Vector out = zero_vector(a.rows(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix diff: shape");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

std::vector<std::size_t> reduce_to_rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    const FieldElement inv = ff_inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return reduce_to_rref(m).size(); }

FieldElement determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::uint64_t q = m.modulus();
  FieldElement det = FieldElement::one(q);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return FieldElement::zero(q);
    if (found != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(found, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const FieldElement inv = ff_inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix work = m.augment(Matrix::identity(n, m.modulus()));
  auto pivots = reduce_to_rref(work);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix out(n, n, m.modulus());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = work(r, n + c);
  }
  return out;
}

LinearSolveOutcome solve_linear(const Matrix& coeffs, const Matrix& rhs) {
  if (coeffs.rows() != rhs.rows()) {
    throw DimensionError("solve_linear: coeffs has " + std::to_string(coeffs.rows()) +
                         " rows, rhs has " + std::to_string(rhs.rows()));
  }
  if (coeffs.modulus() != rhs.modulus()) throw ModulusMismatch("solve_linear: different fields");
  const std::size_t unknowns = coeffs.cols();
  Matrix work = coeffs.augment(rhs);
  const auto pivots = reduce_to_rref(work);

  LinearSolveOutcome out;
  for (auto col : pivots) {
    if (col >= unknowns) {
      out.kind = SolveKind::kInconsistent;
      out.pivot_in_augmented_last_column = true;
      return out;
    }
  }
  Matrix x(unknowns, rhs.cols(), coeffs.modulus());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[k], c) = work(k, unknowns + c);
  }
  out.kind = pivots.size() == unknowns ? SolveKind::kUnique : SolveKind::kUnderdetermined;
  out.solution = std::move(x);
  return out;
}

bool row_span_contains(const Matrix& mat, const Matrix& target_row) {
  if (target_row.rows() != 1 || target_row.cols() != mat.cols()) {
    throw DimensionError("row_span_contains: target must be 1 x " + std::to_string(mat.cols()));
  }
  // target = y^T mat  <=>  mat^T y = target^T
  return solve_linear(mat.transpose(), target_row.transpose()).kind != SolveKind::kInconsistent;
}

}  // namespace bgc
