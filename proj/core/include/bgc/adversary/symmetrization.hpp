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
#include <optional>
#include <span>
#include <vector>

#include "bgc/algebra/field.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/coding/decoding.hpp"

namespace bgc {

// The system B(S, :)^T x = lambda * 1 whose solutions are attack errors on S.
LinearSolveOutcome symmetrization_system(const DecodingMatrix& b, std::span<const std::size_t> attack_set,
                                         const FieldElement& lambda);

// d x n error matrix that makes every group in `b` decode to g + lambda * 1,
// or nothing when the attack set cannot reach the all-one vector.
std::optional<Matrix> symmetrization_attack(const CodeContext& ctx, const DecodingMatrix& b,
                                            std::span<const std::size_t> attack_set,
                                            std::size_t dimension, const FieldElement& lambda);

// Greedy row basis of B, taken in `preference` order and capped at `budget`.
// Empty when the chosen rows do not span the all-one vector.
std::optional<std::vector<std::size_t>> choose_attack_set(const DecodingMatrix& b,
                                                          std::span<const std::size_t> preference,
                                                          std::size_t budget);

}  // namespace bgc
