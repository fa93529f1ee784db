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

#include "bgc/harness/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "bgc/errors.hpp"
#include "bgc/harness/simulate.hpp"

namespace bgc {

namespace {

using nlohmann::json;

std::vector<std::size_t> u_values(const SweepGrid& grid, std::size_t n, std::size_t s) {
  if (!grid.u.empty()) return grid.u;
  std::vector<std::size_t> out;
  if (n <= s) return out;
  for (std::size_t u = 1; u <= std::min(s + 1, n - s); ++u) out.push_back(u);
  return out;
}

// Why a parameter point cannot be run, or empty when it can.
std::string rejection_reason(const SimulationConfig& c) {
  try {
    validate(c);
    if (c.assignment == AssignmentKind::kRandomRegular) {
      if (c.p * (c.s + c.u) < c.n) throw InvalidParams("random-regular needs p*rho >= n");
    } else {
      make_assignment(c);
    }
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string describe_failure(const RunMetrics& m) {
  std::ostringstream os;
  os << csv_row(m);
  if (!m.error.empty()) os << " error: " << m.error;
  if (!m.within_bounds) os << " (bound violation)";
  return os.str();
}

}  // namespace

SweepGrid theorem_grid() {
  SweepGrid g;
  g.n = {4, 5, 6, 7, 8};
  g.s = {1, 2, 3};
  g.p = {1, 4, 9, 16};
  g.d = {1, 3};
  g.assignments = {AssignmentKind::kCyclic, AssignmentKind::kFractional,
                   AssignmentKind::kRandomRegular};
  g.adversaries = {AdversaryKind::kHonest, AdversaryKind::kRandomAlways,
                   AdversaryKind::kRandomInitialOnly, AdversaryKind::kTournamentLiar};
  g.seeds = 20;
  return g;
}

SweepGrid parse_grid(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidParams(std::string("grid is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidParams("grid must be a JSON object");
  SweepGrid g;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") {
        g.n = value.get<std::vector<std::size_t>>();
      } else if (key == "s") {
        g.s = value.get<std::vector<std::size_t>>();
      } else if (key == "u") {
        g.u = value.get<std::vector<std::size_t>>();
      } else if (key == "p") {
        g.p = value.get<std::vector<std::size_t>>();
      } else if (key == "d") {
        g.d = value.get<std::vector<std::size_t>>();
      } else if (key == "assignments") {
        for (const auto& a : value) g.assignments.push_back(parse_assignment_kind(a.get<std::string>()));
      } else if (key == "adversaries") {
        for (const auto& a : value) g.adversaries.push_back(parse_adversary_kind(a.get<std::string>()));
      } else if (key == "seeds") {
        g.seeds = value.get<std::size_t>();
      } else if (key == "base_seed") {
        g.base_seed = value.get<std::uint64_t>();
      } else if (key == "q") {
        g.q = value.get<std::uint64_t>();
      } else {
        throw InvalidParams("unknown grid key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("grid value has the wrong type: ") + e.what());
  }
  if (std::any_of(g.assignments.begin(), g.assignments.end(),
                  [](AssignmentKind k) { return k == AssignmentKind::kFile; })) {
    throw InvalidParams("sweeps generate their assignments; 'file' is not allowed");
  }
  return g;
}

SweepGrid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open grid " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_grid(text.str());
}

SweepReport run_sweep(const SweepGrid& grid, std::size_t threads) {
  SweepReport report;
  std::vector<SimulationConfig> jobs;
  for (auto n : grid.n) {
    for (auto s : grid.s) {
      for (auto u : u_values(grid, n, s)) {
        for (auto p : grid.p) {
          for (auto d : grid.d) {
            for (auto kind : grid.assignments) {
              SimulationConfig base;
              base.n = n;
              base.s = s;
              base.u = u;
              base.p = p;
              base.d = d;
              base.q = grid.q;
              base.assignment = kind;
              base.seed = grid.base_seed;
              const std::string reason = rejection_reason(base);
              if (!reason.empty()) {
                report.rejected.push_back({n, s, u, p, d, to_string(kind), reason});
                continue;
              }
              for (auto adversary : grid.adversaries) {
                for (std::size_t k = 0; k < grid.seeds; ++k) {
                  SimulationConfig c = base;
                  c.adversary.kind = adversary;
                  c.seed = grid.base_seed + k;
                  jobs.push_back(std::move(c));
                }
              }
            }
          }
        }
      }
    }
  }

  report.runs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        report.runs[i] = simulate(jobs[i]).metrics;
      } catch (const Error& e) {
        RunMetrics& m = report.runs[i];
        m.n = jobs[i].n;
        m.s = jobs[i].s;
        m.u = jobs[i].u;
        m.p = jobs[i].p;
        m.d = jobs[i].d;
        m.q = jobs[i].q;
        m.assignment = to_string(jobs[i].assignment);
        m.adversary = to_string(jobs[i].adversary.kind);
        m.seed = jobs[i].seed;
        m.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(jobs.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.summary = summarize(report.runs);
  for (const auto& m : report.runs) {
    if (!m.correct || !m.within_bounds) report.failures.push_back(describe_failure(m));
  }
  return report;
}

void write_rejected_csv(std::ostream& os, const std::vector<RejectedRow>& rows) {
  os << "n,s,u,p,d,assignment,reason\n";
  for (const auto& r : rows) {
    std::string reason = r.reason;
    std::replace(reason.begin(), reason.end(), ',', ';');
    os << r.n << ',' << r.s << ',' << r.u << ',' << r.p << ',' << r.d << ',' << r.assignment << ','
       << reason << '\n';
  }
}

}  // namespace bgc
