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
#include <span>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"

namespace bgc {

// Parameters of the Reed-Solomon code behind the scheme. Worker j is tied to
// a distinct nonzero evaluation point w_j; the generator F is (r+1) x n with
// F(k, j) = w_j^k, where r = n - (s + u). Immutable once built.
class CodeContext {
 public:
  // Evaluation points default to w_j = j (1-based), which needs q > n.
  static CodeContext build(std::size_t n, std::size_t s, std::size_t u,
                           std::uint64_t q = kDefaultModulus);
  static CodeContext with_points(std::size_t s, std::size_t u, Vector points);

  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }
  std::size_t u() const { return u_; }
  std::size_t r() const { return r_; }
  std::size_t replication() const { return s_ + u_; }
  std::uint64_t modulus() const { return q_; }

  std::span<const FieldElement> points() const { return points_; }
  const FieldElement& point(std::size_t worker) const { return points_[worker]; }
  const Matrix& generator() const { return generator_; }

 private:
  CodeContext() = default;

  std::size_t n_ = 0;
  std::size_t s_ = 0;
  std::size_t u_ = 0;
  std::size_t r_ = 0;
  std::uint64_t q_ = 0;
  Vector points_;
  Matrix generator_;
};

}  // namespace bgc
