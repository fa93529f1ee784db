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
#include <iosfwd>
#include <string>
#include <vector>

namespace bgc {

// Binary data allocation A in {0,1}^{n x p}: A(j, i) == true iff sample i is
// held by worker j. Indices are 0-based in code and printed 1-based.
class AssignmentMatrix {
 public:
  AssignmentMatrix() = default;
  AssignmentMatrix(std::size_t workers, std::size_t samples, std::size_t replication);

  std::size_t workers() const { return n_; }
  std::size_t samples() const { return p_; }
  // The replication factor the matrix was generated or parsed with.
  std::size_t replication() const { return rho_; }

  bool operator()(std::size_t worker, std::size_t sample) const {
    return bits_[worker * p_ + sample] != 0;
  }
  void assign(std::size_t worker, std::size_t sample, bool value = true) {
    bits_[worker * p_ + sample] = value ? 1 : 0;
  }

  std::size_t column_sum(std::size_t sample) const;
  std::size_t row_sum(std::size_t worker) const;

  // Workers not holding `sample` (the zero set of column `sample`).
  std::vector<std::size_t> unassigned_workers(std::size_t sample) const;
  std::vector<std::size_t> samples_of(std::size_t worker) const;

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::size_t rho_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Sample i goes to workers i, i+1, ..., i+rho-1 (mod n).
// Throws InvalidParams when rho > n, rho == 0, p == 0, or when some worker
// would be left without a sample (p < n and p + rho - 1 < n).
AssignmentMatrix make_cyclic(std::size_t n, std::size_t p, std::size_t rho);

// Workers split into n/rho groups of rho consecutive workers; group g holds
// the g-th contiguous slice of samples. When n/rho does not divide p the first
// p mod (n/rho) groups receive one extra sample.
AssignmentMatrix make_fractional(std::size_t n, std::size_t p, std::size_t rho);

// Column-by-column uniform choice of rho workers per sample, then repair of
// empty rows by moving samples away from workers holding two or more.
// Deterministic in `seed`. Throws GenerationFailed after 1000 repair passes.
AssignmentMatrix make_random_regular(std::size_t n, std::size_t p, std::size_t rho,
                                     std::uint64_t seed);

// Every column sums to rho and every row to at least one.
bool validate_regular(const AssignmentMatrix& a, std::size_t rho);

// Plain-text format: "n p rho" then n lines of p characters '0'/'1'.
std::string to_text(const AssignmentMatrix& a);
AssignmentMatrix parse_assignment(const std::string& text);
void write_assignment(std::ostream& os, const AssignmentMatrix& a);
AssignmentMatrix read_assignment(std::istream& is);

}  // namespace bgc
