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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bgc/errors.hpp"
#include "bgc/harness/config.hpp"
#include "bgc/harness/metrics.hpp"
#include "bgc/harness/simulate.hpp"
#include "bgc/harness/sweep.hpp"
#include "bgc/harness/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SimulateFlags {
  std::string config;
  std::size_t n = 0, s = 0, u = 0, p = 0, d = 0;
  std::uint64_t q = 0;
  std::string assignment;
  std::string assignment_file;
  std::string adversary;
  std::vector<std::size_t> controlled;
  std::string grouping;
  std::uint64_t seed = 0;
  std::string out;
};

template <typename T>
void override_if(const CLI::App& app, const char* flag, const T& value, T& target) {
  if (app.count(flag) > 0) target = value;
}

int run_simulate(const CLI::App& app, const SimulateFlags& f) {
  bgc::SimulationConfig c;
  c.seed = bgc::default_seed();
  if (!f.config.empty()) c = bgc::load_config(f.config, c);
  override_if(app, "--n", f.n, c.n);
  override_if(app, "--s", f.s, c.s);
  override_if(app, "--u", f.u, c.u);
  override_if(app, "--p", f.p, c.p);
  override_if(app, "--d", f.d, c.d);
  override_if(app, "--q", f.q, c.q);
  override_if(app, "--seed", f.seed, c.seed);
  if (app.count("--assignment") > 0) c.assignment = bgc::parse_assignment_kind(f.assignment);
  if (app.count("--assignment-file") > 0) {
    c.assignment = bgc::AssignmentKind::kFile;
    c.assignment_file = f.assignment_file;
  }
  if (app.count("--adversary") > 0) c.adversary.kind = bgc::parse_adversary_kind(f.adversary);
  if (app.count("--controlled") > 0) {
    std::vector<std::size_t> zero_based;
    for (auto j : f.controlled) {
      if (j == 0) throw bgc::InvalidParams("--controlled takes 1-based worker indices");
      zero_based.push_back(j - 1);
    }
    c.adversary.controlled = zero_based;
  }
  if (app.count("--grouping") > 0) {
    c.grouping = f.grouping == "seeded-shuffle" ? bgc::GroupingOrder::kSeededShuffle
                                                : bgc::GroupingOrder::kLowestIndex;
  }
  if (!f.out.empty()) {
    c.transcript_path = f.out + ".jsonl";
    c.metrics_path = f.out + ".csv";
  }

  const bgc::SimulationOutcome outcome = bgc::simulate_to_files(c);
  std::cout << bgc::csv_header() << '\n' << bgc::csv_row(outcome.metrics) << '\n';
  if (!outcome.metrics.error.empty()) std::cerr << "error: " << outcome.metrics.error << '\n';
  if (!outcome.metrics.within_bounds && outcome.metrics.error.empty()) {
    std::cerr << "error: transcript exceeds the resilience bounds\n";
  }
  return outcome.metrics.correct && outcome.metrics.within_bounds ? 0 : kExitFailure;
}

int run_sweep_command(const std::string& grid_path, bool theorem, std::size_t threads,
                      const std::string& out, std::size_t seeds_override) {
  bgc::SweepGrid grid = theorem ? bgc::theorem_grid() : bgc::load_grid(grid_path);
  if (seeds_override > 0) grid.seeds = seeds_override;
  const bgc::SweepReport report = bgc::run_sweep(grid, threads);
  if (out.empty()) {
    bgc::write_csv(std::cout, report.runs);
  } else {
    std::ofstream csv(out);
    if (!csv) throw bgc::InvalidParams("cannot write " + out);
    bgc::write_csv(csv, report.runs);
    std::ofstream rejected(out + ".rejected.csv");
    bgc::write_rejected_csv(rejected, report.rejected);
  }
  std::cerr << report.summary << " rejected=" << report.rejected.size() << '\n';
  for (const auto& line : report.failures) std::cerr << "failed: " << line << '\n';
  return report.summary.clean() ? 0 : kExitFailure;
}

int run_verify(const std::vector<std::string>& which, std::uint64_t seed) {
  std::vector<std::string> names = which;
  if (names.empty() || (names.size() == 1 && names.front() == "all")) {
    names = bgc::verification_names();
  }
  bool ok = true;
  for (const auto& name : names) {
    const bgc::VerifyReport report = bgc::run_verification(name, seed);
    std::cout << report << '\n';
    ok = ok && report.passed();
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Byzantine-resilient gradient coding simulator"};
  app.require_subcommand(1);

  SimulateFlags sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Run the protocol once");
  simulate->add_option("--config", sim.config, "JSON configuration file");
  simulate->add_option("--n", sim.n, "Number of workers");
  simulate->add_option("--s", sim.s, "Malicious workers tolerated");
  simulate->add_option("--u", sim.u, "Redundancy parameter, 1 <= u <= s+1");
  simulate->add_option("--p", sim.p, "Number of samples");
  simulate->add_option("--d", sim.d, "Gradient dimension");
  simulate->add_option("--q", sim.q, "Field size (prime)");
  simulate->add_option("--assignment", sim.assignment, "cyclic, fractional or random-regular");
  simulate->add_option("--assignment-file", sim.assignment_file, "Assignment matrix in text form");
  simulate->add_option("--adversary", sim.adversary, "Adversary strategy");
  simulate->add_option("--controlled", sim.controlled, "1-based workers under adversary control");
  simulate->add_option("--grouping", sim.grouping, "lowest-index or seeded-shuffle")
      ->check(CLI::IsMember({"lowest-index", "seeded-shuffle"}));
  simulate->add_option("--seed", sim.seed, "Run seed (default: $BGC_SEED or 0)");
  simulate->add_option("--out", sim.out, "Output prefix for <out>.jsonl and <out>.csv");

  std::string grid_path;
  bool theorem = false;
  std::size_t threads = 0;
  std::size_t seeds = 0;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid");
  sweep->add_option("--grid", grid_path, "JSON grid file");
  sweep->add_flag("--theorem-grid", theorem, "Use the built-in bound-check grid");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--seeds", seeds, "Override the number of seeds per point");
  sweep->add_option("--out", sweep_out, "CSV output path (default: stdout)");

  std::vector<std::string> checks;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Run exhaustive and randomized checks");
  verify->add_option("which", checks, "lemma2, lemma3, theorem-optimality, vandermonde, cauchy, ecc, remark1 or all");
  verify->add_option("--seed", verify_seed, "Seed for randomized checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(*simulate, sim);
    if (sweep->parsed()) {
      if (grid_path.empty() && !theorem) {
        std::cerr << "sweep needs --grid or --theorem-grid\n";
        return kExitUsage;
      }
      return run_sweep_command(grid_path, theorem, threads, sweep_out, seeds);
    }
    if (verify->parsed()) return run_verify(checks, verify_seed);
  } catch (const bgc::InvalidParams& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bgc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
