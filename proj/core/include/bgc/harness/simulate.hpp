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

#include <memory>

#include "bgc/adversary/strategy.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/harness/config.hpp"
#include "bgc/harness/metrics.hpp"
#include "bgc/protocol/transcript.hpp"

namespace bgc {

AssignmentMatrix make_assignment(const SimulationConfig& config);

// Uniform d x p gradients drawn from the config seed.
Matrix make_gradients(const SimulationConfig& config);

std::unique_ptr<AdversaryStrategy> make_adversary(const SimulationConfig& config,
                                                  const CodeContext& code);

struct SimulationOutcome {
  RunMetrics metrics;
  Transcript transcript;  // partial when the run threw
  Vector expected;        // G * 1
};

// Validates, runs once and fills the metrics. Protocol failures are reported
// in metrics.error, invalid configurations throw InvalidParams.
SimulationOutcome simulate(const SimulationConfig& config);

// simulate() plus the transcript and CSV files named in the config.
SimulationOutcome simulate_to_files(const SimulationConfig& config);

}  // namespace bgc
