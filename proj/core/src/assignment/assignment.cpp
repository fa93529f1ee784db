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

#include "bgc/assignment/assignment.hpp"

#include <random>
#include <string>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

constexpr int kMaxRepairPasses = 1000;

void check_basic(std::size_t n, std::size_t p, std::size_t rho) {
  if (n == 0 || p == 0 || rho == 0) {
    throw InvalidParams("assignment needs n, p, rho >= 1 (got n=" + std::to_string(n) +
                        ", p=" + std::to_string(p) + ", rho=" + std::to_string(rho) + ")");
  }
  if (rho > n) {
    throw InvalidParams("replication " + std::to_string(rho) + " exceeds worker count " +
                        std::to_string(n));
  }
}

}  // namespace

AssignmentMatrix::AssignmentMatrix(std::size_t workers, std::size_t samples,
                                   std::size_t replication)
    : n_(workers), p_(samples), rho_(replication), bits_(workers * samples, 0) {}

std::size_t AssignmentMatrix::column_sum(std::size_t sample) const {
  std::size_t sum = 0;
  for (std::size_t j = 0; j < n_; ++j) sum += (*this)(j, sample) ? 1 : 0;
  return sum;
}

std::size_t AssignmentMatrix::row_sum(std::size_t worker) const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < p_; ++i) sum += (*this)(worker, i) ? 1 : 0;
  return sum;
}

std::vector<std::size_t> AssignmentMatrix::unassigned_workers(std::size_t sample) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (!(*this)(j, sample)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> AssignmentMatrix::samples_of(std::size_t worker) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p_; ++i) {
    if ((*this)(worker, i)) out.push_back(i);
  }
  return out;
}

AssignmentMatrix make_cyclic(std::size_t n, std::size_t p, std::size_t rho) {
  check_basic(n, p, rho);
  if (p < n && p + rho - 1 < n) {
    throw InvalidParams("cyclic layout with n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                        ", rho=" + std::to_string(rho) + " leaves workers without samples");
  }
  AssignmentMatrix a(n, p, rho);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < rho; ++k) a.assign((i + n - k) % n, i);
  }
  return a;
}

AssignmentMatrix make_fractional(std::size_t n, std::size_t p, std::size_t rho) {
  check_basic(n, p, rho);
  if (n % rho != 0) {
    throw InvalidParams("fractional repetition needs rho | n (n=" + std::to_string(n) +
                        ", rho=" + std::to_string(rho) + ")");
  }
  const std::size_t groups = n / rho;
  if (p < groups) {
    throw InvalidParams("fractional repetition needs p >= n/rho = " + std::to_string(groups));
  }
  AssignmentMatrix a(n, p, rho);
  const std::size_t base = p / groups;
  const std::size_t extra = p % groups;
  std::size_t next = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t slice = base + (g < extra ? 1 : 0);
    for (std::size_t i = next; i < next + slice; ++i) {
      for (std::size_t k = 0; k < rho; ++k) a.assign(g * rho + k, i);
    }
    next += slice;
  }
  return a;
}

AssignmentMatrix make_random_regular(std::size_t n, std::size_t p, std::size_t rho,
                                     std::uint64_t seed) {
  check_basic(n, p, rho);
  if (p * rho < n) {
    throw GenerationFailed("p*rho = " + std::to_string(p * rho) + " < n = " + std::to_string(n) +
                           ": some worker must stay empty");
  }
  std::mt19937_64 rng(seed);
  AssignmentMatrix a(n, p, rho);

  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) pool[j] = j;
    // Partial Fisher-Yates: the first rho entries are a uniform rho-subset.
    for (std::size_t k = 0; k < rho; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, n - 1);
      std::swap(pool[k], pool[pick(rng)]);
      a.assign(pool[k], i);
    }
  }

  for (int pass = 0; pass < kMaxRepairPasses; ++pass) {
    bool repaired_all = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (a.row_sum(w) > 0) continue;
      repaired_all = false;
      // Move one sample from a worker that holds at least two.
      std::uniform_int_distribution<std::size_t> pick_sample(0, p - 1);
      const std::size_t i = pick_sample(rng);
      std::vector<std::size_t> donors;
      for (std::size_t v = 0; v < n; ++v) {
        if (a(v, i) && a.row_sum(v) >= 2) donors.push_back(v);
      }
      if (donors.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick_donor(0, donors.size() - 1);
      a.assign(donors[pick_donor(rng)], i, false);
      a.assign(w, i, true);
    }
    if (repaired_all) return a;
  }
  if (validate_regular(a, rho)) return a;
  throw GenerationFailed("random regular assignment: repair did not converge");
}

bool validate_regular(const AssignmentMatrix& a, std::size_t rho) {
  if (a.workers() == 0 || a.samples() == 0) return false;
  for (std::size_t i = 0; i < a.samples(); ++i) {
    if (a.column_sum(i) != rho) return false;
  }
  for (std::size_t j = 0; j < a.workers(); ++j) {
    if (a.row_sum(j) == 0) return false;
  }
  return true;
}

}  // namespace bgc
