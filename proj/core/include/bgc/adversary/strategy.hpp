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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "bgc/algebra/field.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/protocol/query.hpp"

namespace bgc {

// Everything about the scheme an omniscient adversary may use. References
// stay valid for the duration of one protocol run.
struct SchemeView {
  const CodeContext& code;
  const AssignmentMatrix& assignment;
  const EncodingMatrix& encoding;  // W^(1)
  std::size_t dimension;           // d
};

// A Byzantine adversary controlling a fixed set of workers. Workers outside
// the set always transmit honest values; the protocol only calls respond()
// for controlled workers, in query order, so a strategy's state can depend
// on past queries only.
class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;

  virtual std::string name() const = 0;

  // Sorted, 0-based worker indices.
  const std::vector<std::size_t>& controlled() const { return controlled_; }
  bool controls(std::size_t worker) const {
    return std::binary_search(controlled_.begin(), controlled_.end(), worker);
  }

  // Called once before the initial responses.
  virtual void attach(const SchemeView& /*scheme*/) {}

  // Value transmitted by a controlled worker. `honest` has length d for the
  // initial query and length 1 for tournament queries.
  virtual Vector respond(const Query& query, std::size_t worker, const Vector& honest) = 0;

 protected:
  explicit AdversaryStrategy(std::vector<std::size_t> controlled);

 private:
  std::vector<std::size_t> controlled_;
};

}  // namespace bgc
