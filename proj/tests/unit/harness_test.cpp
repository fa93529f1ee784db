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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "bgc/errors.hpp"
#include "bgc/harness/config.hpp"
#include "bgc/harness/metrics.hpp"
#include "bgc/harness/simulate.hpp"
#include "bgc/harness/sweep.hpp"
#include "bgc/harness/verify.hpp"

namespace bgc {
namespace {

TEST(ConfigTest, ParsesFullDocument) {
  const auto c = parse_config(R"({"n": 6, "s": 2, "u": 1, "p": 12, "d": 3, "q": 101,
      "assignment": "fractional", "seed": 5, "grouping": "seeded-shuffle",
      "adversary": {"kind": "tournament-liar", "controlled": [2, 5], "target": 4,
                    "levels": [1, 2], "mode": "inconsistent"}})");
  EXPECT_EQ(c.n, 6u);
  EXPECT_EQ(c.p, 12u);
  EXPECT_EQ(c.q, 101u);
  EXPECT_EQ(c.assignment, AssignmentKind::kFractional);
  EXPECT_EQ(c.grouping, GroupingOrder::kSeededShuffle);
  EXPECT_EQ(c.adversary.kind, AdversaryKind::kTournamentLiar);
  EXPECT_EQ(*c.adversary.controlled, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(*c.adversary.plan.target, 3u);
  EXPECT_EQ(c.adversary.plan.mode, LieMode::kInconsistent);
  EXPECT_FALSE(c.adversary.plan.all_levels);
}

TEST(ConfigTest, AdversaryMayBeAName) {
  const auto c = parse_config(R"({"adversary": "random-coin"})");
  EXPECT_EQ(c.adversary.kind, AdversaryKind::kRandomCoin);
  EXPECT_EQ(c.n, 3u);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_THROW(parse_config(R"({"bogus": 1})"), InvalidParams);
  EXPECT_THROW(parse_config(R"({"adversary": "nope"})"), InvalidParams);
  EXPECT_THROW(parse_config("[1,2"), std::exception);
  EXPECT_THROW(parse_assignment_kind("diagonal"), InvalidParams);
}

TEST(ConfigTest, ValidateCatchesInfeasibleParameters) {
  SimulationConfig c;
  EXPECT_NO_THROW(validate(c));
  c.u = 0;
  EXPECT_THROW(validate(c), InvalidParams);
  c = {};
  c.s = 2;
  c.u = 2;
  EXPECT_THROW(validate(c), InvalidParams);
  c = {};
  c.q = 3;
  EXPECT_THROW(validate(c), InvalidParams);
  c = {};
  c.adversary.controlled = std::vector<std::size_t>{0, 1};
  EXPECT_THROW(validate(c), InvalidParams);
}

TEST(ConfigTest, NamesRoundTrip) {
  for (const auto& name : adversary_names()) {
    EXPECT_EQ(to_string(parse_adversary_kind(name)), name);
  }
  for (auto kind : {AssignmentKind::kCyclic, AssignmentKind::kFractional,
                    AssignmentKind::kRandomRegular, AssignmentKind::kFile}) {
    EXPECT_EQ(parse_assignment_kind(to_string(kind)), kind);
  }
}

TEST(ConfigTest, SeedFromEnvironment) {
  ::unsetenv("BGC_SEED");
  EXPECT_EQ(default_seed(17), 17u);
  ::setenv("BGC_SEED", "4242", 1);
  EXPECT_EQ(default_seed(17), 4242u);
  ::setenv("BGC_SEED", "not-a-number", 1);
  EXPECT_EQ(default_seed(17), 17u);
  ::unsetenv("BGC_SEED");
}

TEST(MetricsTest, CsvLayout) {
  EXPECT_EQ(csv_header(),
            "n,s,u,p,d,q,assignment,adversary,seed,correct,c,C_oh,rounds,downlink_bits,eliminated");
  RunMetrics m;
  m.n = 3;
  m.s = 1;
  m.u = 1;
  m.p = 3;
  m.d = 1;
  m.q = 7;
  m.assignment = "cyclic";
  m.adversary = "worked-example";
  m.correct = true;
  m.c = 1;
  m.c_oh = 6;
  m.rounds = 1;
  m.downlink_bits = 2;
  m.eliminated = {3, 5};
  EXPECT_EQ(csv_row(m), "3,1,1,3,1,7,cyclic,worked-example,0,true,1,6,1,2,3;5");
  std::ostringstream os;
  const std::vector<RunMetrics> rows{m};
  write_csv(os, rows);
  EXPECT_EQ(os.str(), csv_header() + "\n" + csv_row(m) + "\n");
}

TEST(MetricsTest, SummaryCountsProblems) {
  std::vector<RunMetrics> rows(3);
  for (auto& r : rows) {
    r.correct = true;
    r.within_bounds = true;
  }
  rows[0].c = 4;
  rows[1].correct = false;
  rows[2].within_bounds = false;
  const auto s = summarize(rows);
  EXPECT_EQ(s.runs, 3u);
  EXPECT_EQ(s.incorrect, 1u);
  EXPECT_EQ(s.bound_violations, 1u);
  EXPECT_EQ(s.max_c, 4u);
  EXPECT_FALSE(s.clean());
}

TEST(SimulateTest, WorkedExample) {
  const auto out = simulate(worked_example_config());
  EXPECT_TRUE(out.metrics.correct);
  EXPECT_EQ(out.metrics.eliminated, (std::vector<std::size_t>{3}));
  EXPECT_EQ(out.metrics.c, 1u);
  EXPECT_EQ(out.metrics.c_oh, 6u);
  EXPECT_EQ(out.metrics.downlink_bits, 2u);
  EXPECT_TRUE(out.metrics.error.empty());
}

TEST(SimulateTest, IsDeterministicForASeed) {
  SimulationConfig c;
  c.n = 7;
  c.s = 3;
  c.u = 1;
  c.p = 14;
  c.d = 2;
  c.seed = 99;
  c.adversary.kind = AdversaryKind::kRandomCoin;
  const auto a = simulate(c);
  const auto b = simulate(c);
  EXPECT_EQ(csv_row(a.metrics), csv_row(b.metrics));
  EXPECT_EQ(to_jsonl(a.transcript), to_jsonl(b.transcript));
  EXPECT_TRUE(a.metrics.correct);
}

TEST(SimulateTest, EveryAdversaryKindRuns) {
  for (const auto& name : adversary_names()) {
    SimulationConfig c;
    c.n = 6;
    c.s = 2;
    c.u = 1;
    c.p = 6;
    c.seed = 3;
    c.adversary.kind = parse_adversary_kind(name);
    if (c.adversary.kind == AdversaryKind::kWorkedExample) c = worked_example_config();
    const auto out = simulate(c);
    EXPECT_TRUE(out.metrics.correct) << name;
    EXPECT_TRUE(out.metrics.within_bounds) << name;
  }
}

SweepGrid small_grid() {
  SweepGrid g;
  g.n = {4, 5, 6};
  g.s = {1, 2};
  g.p = {4, 7};
  g.d = {1};
  g.assignments = {AssignmentKind::kCyclic, AssignmentKind::kFractional};
  g.adversaries = {AdversaryKind::kHonest, AdversaryKind::kTournamentLiar};
  g.seeds = 2;
  g.base_seed = 11;
  return g;
}

TEST(SweepTest, ThreadCountDoesNotChangeResults) {
  const auto one = run_sweep(small_grid(), 1);
  const auto four = run_sweep(small_grid(), 4);
  ASSERT_EQ(one.runs.size(), four.runs.size());
  for (std::size_t i = 0; i < one.runs.size(); ++i) {
    EXPECT_EQ(csv_row(one.runs[i]), csv_row(four.runs[i]));
  }
  EXPECT_TRUE(one.summary.clean());
  EXPECT_FALSE(one.rejected.empty());
}

TEST(SweepTest, EmptyGridHasNoRuns) {
  const auto g = parse_grid(R"({"n": []})");
  const auto report = run_sweep(g, 2);
  EXPECT_TRUE(report.runs.empty());
  EXPECT_EQ(report.summary.runs, 0u);
}

TEST(SweepTest, FileAssignmentIsRejectedInGrids) {
  EXPECT_THROW(parse_grid(R"({"assignments": ["file"]})"), InvalidParams);
}

TEST(SweepTest, RejectedRowsAreWritten) {
  std::vector<RejectedRow> rows(1);
  rows[0] = {3, 2, 1, 3, 1, "cyclic", "needs s + u <= n"};
  std::ostringstream os;
  write_rejected_csv(os, rows);
  EXPECT_NE(os.str().find("3,2,1,3,1,cyclic"), std::string::npos);
}

TEST(VerifyTest, NamesDispatch) {
  const auto names = verification_names();
  EXPECT_EQ(names.size(), 7u);
  for (const auto& name : names) {
    if (name == "vandermonde" || name == "cauchy") continue;
    EXPECT_TRUE(run_verification(name, 1).passed()) << name;
  }
  EXPECT_THROW(run_verification("nonsense", 1), InvalidParams);
}

}  // namespace
}  // namespace bgc
