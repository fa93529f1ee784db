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

#include "bgc/coding/code_context.hpp"

#include <string>
#include <utility>

#include "bgc/algebra/structured.hpp"
#include "bgc/errors.hpp"

namespace bgc {

CodeContext CodeContext::build(std::size_t n, std::size_t s, std::size_t u, std::uint64_t q) {
  if (!is_prime(q) || q > kMaxModulus) {
    throw InvalidParams("modulus " + std::to_string(q) + " is not a prime below 2^32");
  }
  if (q <= n) {
    throw InvalidParams("modulus " + std::to_string(q) + " must exceed the worker count " +
                        std::to_string(n));
  }
  Vector points;
  points.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) points.emplace_back(j, q);
  return with_points(s, u, std::move(points));
}

CodeContext CodeContext::with_points(std::size_t s, std::size_t u, Vector points) {
  const std::size_t n = points.size();
  if (n == 0) throw InvalidParams("code context needs at least one worker");
  if (u < 1 || u > s + 1) {
    throw InvalidParams("u must satisfy 1 <= u <= s+1 (s=" + std::to_string(s) +
                        ", u=" + std::to_string(u) + ")");
  }
  if (n < s + u) {
    throw InvalidParams("n=" + std::to_string(n) + " is smaller than the replication s+u=" +
                        std::to_string(s + u));
  }
  const std::uint64_t q = points.front().modulus();
  if (!is_prime(q)) throw InvalidParams("modulus " + std::to_string(q) + " is not prime");
  for (std::size_t a = 0; a < n; ++a) {
    if (points[a].modulus() != q) throw ModulusMismatch("evaluation points from mixed fields");
    if (points[a].is_zero()) throw InvalidParams("evaluation points must be nonzero");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (points[a] == points[b]) throw InvalidParams("evaluation points must be distinct");
    }
  }

  CodeContext ctx;
  ctx.n_ = n;
  ctx.s_ = s;
  ctx.u_ = u;
  ctx.r_ = n - (s + u);
  ctx.q_ = q;
  ctx.points_ = std::move(points);
  ctx.generator_ = vandermonde(ctx.points_, ctx.r_ + 1).transpose();
  return ctx;
}

}  // namespace bgc
