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
#include <optional>
#include <vector>

#include "bgc/coding/encoding.hpp"

namespace bgc {

// Full binary tree over the samples [0, p). Each node covers a contiguous
// range; a node of length L splits into a left child of length ceil(L/2) and
// a right child with the remainder. Leaves hold single samples.
class MatchTree {
 public:
  struct Node {
    SampleRange range;
    std::size_t depth = 0;
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;

    bool is_leaf() const { return !left.has_value(); }
  };

  explicit MatchTree(std::size_t samples);

  std::size_t samples() const { return samples_; }
  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t index) const { return nodes_.at(index); }
  const Node& left(const Node& n) const { return nodes_.at(*n.left); }
  const Node& right(const Node& n) const { return nodes_.at(*n.right); }
  std::size_t node_count() const { return nodes_.size(); }

  // ceil(log2 p); zero for a single sample.
  std::size_t height() const;

  // Leaf samples from left to right.
  std::vector<std::size_t> leaves() const;

 private:
  std::size_t build(SampleRange range, std::size_t depth);

  std::size_t samples_;
  std::vector<Node> nodes_;
};

// ceil(log2 x) for x >= 1.
std::size_t ceil_log2(std::size_t x);

}  // namespace bgc
