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

#include "bgc/protocol/match_tree.hpp"

#include <algorithm>

#include "bgc/errors.hpp"

namespace bgc {

std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  std::size_t span = 1;
  while (span < x) {
    span <<= 1U;
    ++bits;
  }
  return bits;
}

MatchTree::MatchTree(std::size_t samples) : samples_(samples) {
  if (samples == 0) throw InvalidParams("match tree over zero samples");
  nodes_.reserve(2 * samples - 1);
  build({0, samples}, 0);
}

std::size_t MatchTree::build(SampleRange range, std::size_t depth) {
  const std::size_t index = nodes_.size();
  nodes_.push_back(Node{range, depth, std::nullopt, std::nullopt});
  if (range.size() > 1) {
    const std::size_t mid = range.begin + (range.size() + 1) / 2;
    const std::size_t l = build({range.begin, mid}, depth + 1);
    const std::size_t r = build({mid, range.end}, depth + 1);
    nodes_[index].left = l;
    nodes_[index].right = r;
  }
  return index;
}

std::size_t MatchTree::height() const {
  std::size_t h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.depth);
  return h;
}

std::vector<std::size_t> MatchTree::leaves() const {
  std::vector<std::size_t> out;
  // Nodes are stored in pre-order, so leaves appear left to right.
  for (const auto& n : nodes_) {
    if (n.is_leaf()) out.push_back(n.range.begin);
  }
  return out;
}

}  // namespace bgc
