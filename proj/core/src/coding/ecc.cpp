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

#include "bgc/coding/ecc.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order until `fn` returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// If the columns `kept` of the received matrix form a codeword c F_{., kept},
// returns the last message coordinate c_{r+1}, which is the decoded sum.
std::optional<Vector> decode_if_consistent(const CodeContext& ctx, const Matrix& received,
                                           const std::vector<std::size_t>& kept) {
  const std::size_t k = ctx.r() + 1;
  const std::vector<std::size_t> basis(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(k));
  const Matrix f_basis = ctx.generator().select_columns(basis);
  const Matrix message = received.select_columns(basis) * inverse(f_basis);  // d x (r+1)
  const Matrix reencoded = message * ctx.generator().select_columns(kept);
  if (!(reencoded == received.select_columns(kept))) return std::nullopt;
  return message.column_vector(k - 1);
}

}  // namespace

std::size_t punctured_min_distance(const CodeContext& ctx, std::size_t identified) {
  const std::size_t length = ctx.n() - identified;
  return length - (ctx.r() + 1) + 1;
}

Vector ecc_decode(const CodeContext& ctx, const ResponseMatrix& responses,
                  std::span<const std::size_t> identified) {
  const std::size_t n = ctx.n();
  if (responses.values.cols() != n || responses.present.size() != n) {
    throw DimensionError("ecc_decode: responses must have one column per worker");
  }
  for (const auto& a : responses.query) {
    if (a.value() != 1) throw InvalidParams("ecc_decode works on the all-one query");
  }
  std::vector<bool> erased(n, false);
  for (auto j : identified) {
    if (j >= n) throw DimensionError("ecc_decode: identified worker out of range");
    erased[j] = true;
  }
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < n; ++j) {
    if (erased[j]) continue;
    if (!responses.present[j]) {
      throw InvalidParams("ecc_decode: missing response from non-identified worker " +
                          std::to_string(j + 1));
    }
    candidates.push_back(j);
  }

  const std::size_t k = ctx.r() + 1;
  const std::size_t max_errors = ctx.u() - 1;
  for (std::size_t t = 0; t <= max_errors; ++t) {
    if (candidates.size() < k + t) break;
    std::optional<Vector> decoded;
    for_each_subset(candidates.size(), t, [&](const std::vector<std::size_t>& dropped) {
      std::vector<std::size_t> kept;
      kept.reserve(candidates.size() - t);
      std::size_t next = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (next < dropped.size() && dropped[next] == c) {
          ++next;
          continue;
        }
        kept.push_back(candidates[c]);
      }
      decoded = decode_if_consistent(ctx, responses.values, kept);
      return decoded.has_value();
    });
    if (decoded) return *decoded;
  }
  throw DecodeFailure("no error pattern of weight <= " + std::to_string(max_errors) +
                      " among " + std::to_string(candidates.size()) +
                      " non-identified workers explains the responses");
}

}  // namespace bgc
