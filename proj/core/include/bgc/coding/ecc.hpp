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
#include <span>
#include <vector>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/coding/code_context.hpp"

namespace bgc {

// Responses received for one query: column j is what worker j sent (honest
// value plus its error). `present` marks which columns were received.
struct ResponseMatrix {
  Vector query;
  Matrix values;  // d x n
  std::vector<bool> present;
};

// Minimum distance of the code punctured to the n - identified workers left:
// (n - identified) - (r + 1) + 1. Equals 2u - 1 when identified = s - (u - 1).
std::size_t punctured_min_distance(const CodeContext& ctx, std::size_t identified);

// Errors-and-erasures decoding of the initial responses (query = all ones).
// Identified workers are erased; among the rest, every error support of size
// at most u-1 is tried in increasing size and the first one leaving a
// consistent codeword of the punctured code yields the full gradient.
//
// Throws DecodeFailure when no support works, which means more than u-1
// unidentified workers sent errors.
Vector ecc_decode(const CodeContext& ctx, const ResponseMatrix& responses,
                  std::span<const std::size_t> identified);

}  // namespace bgc
