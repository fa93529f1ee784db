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

#include "bgc/harness/config.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<AssignmentKind, const char*>, 4> kAssignmentNames{{
    {AssignmentKind::kCyclic, "cyclic"},
    {AssignmentKind::kFractional, "fractional"},
    {AssignmentKind::kRandomRegular, "random-regular"},
    {AssignmentKind::kFile, "file"},
}};

constexpr std::array<std::pair<AdversaryKind, const char*>, 7> kAdversaryNames{{
    {AdversaryKind::kHonest, "honest"},
    {AdversaryKind::kRandomAlways, "random-always"},
    {AdversaryKind::kRandomInitialOnly, "random-initial-only"},
    {AdversaryKind::kRandomCoin, "random-coin"},
    {AdversaryKind::kTournamentLiar, "tournament-liar"},
    {AdversaryKind::kWorkedExample, "worked-example"},
    {AdversaryKind::kSymmetrization, "symmetrization"},
}};

std::vector<std::size_t> one_based(const json& arr, const char* key) {
  std::vector<std::size_t> out;
  for (const auto& x : arr) {
    const auto v = x.get<std::size_t>();
    if (v == 0) throw InvalidParams(std::string(key) + " uses 1-based indices");
    out.push_back(v - 1);
  }
  return out;
}

void read_adversary(const json& j, AdversarySpec& spec) {
  if (j.is_string()) {
    spec.kind = parse_adversary_kind(j.get<std::string>());
    return;
  }
  if (!j.is_object()) throw InvalidParams("adversary must be a name or an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      spec.kind = parse_adversary_kind(value.get<std::string>());
    } else if (key == "controlled") {
      spec.controlled = one_based(value, "controlled");
    } else if (key == "lambda") {
      spec.lambda = value.get<std::int64_t>();
    } else if (key == "target") {
      spec.plan.target = one_based(json::array({value}), "target").front();
    } else if (key == "delta") {
      spec.plan.delta = value.get<std::int64_t>();
    } else if (key == "levels") {
      spec.plan.levels = value.get<std::vector<std::size_t>>();
      spec.plan.all_levels = false;
    } else if (key == "all_levels") {
      spec.plan.all_levels = value.get<bool>();
    } else if (key == "mode") {
      const auto mode = value.get<std::string>();
      if (mode == "consistent") {
        spec.plan.mode = LieMode::kConsistent;
      } else if (mode == "inconsistent") {
        spec.plan.mode = LieMode::kInconsistent;
      } else {
        throw InvalidParams("unknown lie mode '" + mode + "'");
      }
    } else if (key == "seed") {
      spec.plan.seed = value.get<std::uint64_t>();
    } else {
      throw InvalidParams("unknown adversary key '" + key + "'");
    }
  }
}

}  // namespace

std::string to_string(AssignmentKind kind) {
  for (const auto& [k, name] : kAssignmentNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string to_string(AdversaryKind kind) {
  for (const auto& [k, name] : kAdversaryNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

AssignmentKind parse_assignment_kind(std::string_view name) {
  for (const auto& [k, n] : kAssignmentNames) {
    if (name == n) return k;
  }
  throw InvalidParams("unknown assignment '" + std::string(name) +
                      "' (cyclic, fractional, random-regular, file)");
}

AdversaryKind parse_adversary_kind(std::string_view name) {
  for (const auto& [k, n] : kAdversaryNames) {
    if (name == n) return k;
  }
  throw InvalidParams("unknown adversary '" + std::string(name) + "'");
}

std::vector<std::string> adversary_names() {
  std::vector<std::string> out;
  for (const auto& entry : kAdversaryNames) out.emplace_back(entry.second);
  return out;
}

SimulationConfig parse_config(const std::string& json_text, SimulationConfig base) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidParams(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidParams("config must be a JSON object");
  SimulationConfig c = std::move(base);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") {
        c.n = value.get<std::size_t>();
      } else if (key == "s") {
        c.s = value.get<std::size_t>();
      } else if (key == "u") {
        c.u = value.get<std::size_t>();
      } else if (key == "p") {
        c.p = value.get<std::size_t>();
      } else if (key == "d") {
        c.d = value.get<std::size_t>();
      } else if (key == "q") {
        c.q = value.get<std::uint64_t>();
      } else if (key == "assignment") {
        c.assignment = parse_assignment_kind(value.get<std::string>());
      } else if (key == "assignment_file") {
        c.assignment_file = value.get<std::string>();
        c.assignment = AssignmentKind::kFile;
      } else if (key == "adversary") {
        read_adversary(value, c.adversary);
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "grouping") {
        const auto g = value.get<std::string>();
        if (g == "lowest-index") {
          c.grouping = GroupingOrder::kLowestIndex;
        } else if (g == "seeded-shuffle") {
          c.grouping = GroupingOrder::kSeededShuffle;
        } else {
          throw InvalidParams("unknown grouping '" + g + "' (lowest-index, seeded-shuffle)");
        }
      } else if (key == "transcript") {
        c.transcript_path = value.get<std::string>();
      } else if (key == "metrics") {
        c.metrics_path = value.get<std::string>();
      } else {
        throw InvalidParams("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("config value has the wrong type: ") + e.what());
  }
  return c;
}

SimulationConfig load_config(const std::string& path, SimulationConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("BGC_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : fallback;
}

void validate(const SimulationConfig& c) {
  auto fail = [](const std::string& msg) { throw InvalidParams(msg); };
  if (c.n == 0 || c.p == 0 || c.d == 0) fail("n, p and d must be at least 1");
  if (c.u < 1 || c.u > c.s + 1) {
    fail("need 1 <= u <= s+1 (s=" + std::to_string(c.s) + ", u=" + std::to_string(c.u) + ")");
  }
  if (c.n < c.s + c.u) {
    fail("need n >= s+u (n=" + std::to_string(c.n) + ", s+u=" + std::to_string(c.s + c.u) + ")");
  }
  if (c.q > kMaxModulus || !is_prime(c.q)) fail("q=" + std::to_string(c.q) + " is not a usable prime");
  if (c.q <= std::max(c.n, c.p)) fail("q must exceed max(n, p)");
  if (c.assignment == AssignmentKind::kFile && c.assignment_file.empty()) {
    fail("assignment=file needs an assignment_file");
  }
  if (c.adversary.controlled) {
    if (c.adversary.controlled->size() > c.s) fail("adversary controls more than s workers");
    for (auto j : *c.adversary.controlled) {
      if (j >= c.n) fail("adversary controls worker " + std::to_string(j + 1) + " > n");
    }
  }
  if (c.adversary.plan.target && *c.adversary.plan.target >= c.p) fail("lie target exceeds p");
  if (c.adversary.kind == AdversaryKind::kWorkedExample && (c.n < 3 || c.s < 1)) {
    fail("the worked-example adversary needs n >= 3 and s >= 1");
  }
}

SimulationConfig worked_example_config() {
  SimulationConfig c;
  c.n = 3;
  c.s = 1;
  c.u = 1;
  c.p = 3;
  c.d = 1;
  c.q = 7;
  c.assignment = AssignmentKind::kCyclic;
  c.adversary.kind = AdversaryKind::kWorkedExample;
  return c;
}

}  // namespace bgc
