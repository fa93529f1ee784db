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

#include "bgc/protocol/transcript.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "bgc/adversary/strategies.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/protocol.hpp"
#include "generators.hpp"

namespace bgc {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string event_of(const std::string& line) {
  const auto start = line.find("\"event\":\"") + 9;
  return line.substr(start, line.find('"', start) - start);
}

Transcript three_worker() {
  const auto code = CodeContext::build(3, 1, 1, 7);
  LiePlan plan;
  plan.target = 0;
  plan.levels = {1};
  auto liar = make_tournament_liar({2}, plan);
  GradientOracle oracle(Matrix::from_rows(7, {{3, 6, 2}}));
  return run_protocol(code, make_cyclic(3, 3, 2), oracle, *liar).transcript;
}

TEST(TranscriptTest, EventSequenceForThreeWorkerExample) {
  const auto lines = lines_of(to_jsonl(three_worker()));
  std::vector<std::string> events;
  for (const auto& l : lines) events.push_back(event_of(l));
  const std::vector<std::string> expected{
      "config",      "query",          "response-set", "decode",      "conflict",
      "query",       "match-level",    "query",        "match-level", "local-compute",
      "elimination", "decode",         "final"};
  EXPECT_EQ(events, expected);
  EXPECT_NE(lines.back().find("\"eliminated\":[3]"), std::string::npos);
  EXPECT_NE(lines.back().find("\"C_oh\":6"), std::string::npos);
  EXPECT_NE(lines.front().find("\"omega\":[1,2,3]"), std::string::npos);
}

TEST(TranscriptTest, ReplayReproducesGradient) {
  gen::Gen g(111);
  for (int trial = 0; trial < 60; ++trial) {
    const auto in = g.instance(7);
    const auto code = CodeContext::build(in.n, in.s, in.u, in.q);
    auto adversary = make_random_corruption(g.subset(in.n, g.uniform(0, in.s)), g.next(),
                                            Persistence::kAlways);
    GradientOracle oracle(g.matrix(2, in.p, in.q));
    const auto result = run_protocol(code, g.assignment(in), oracle, *adversary);
    std::istringstream is(to_jsonl(result.transcript));
    const ReplayResult replay = replay_transcript(is);
    EXPECT_TRUE(replay.matches);
    EXPECT_EQ(replay.recomputed, result.gradient);
    EXPECT_EQ(replay.recorded, result.gradient);
  }
}

TEST(TranscriptTest, ReplayDetectsTampering) {
  std::string text = to_jsonl(three_worker());
  const auto pos = text.find("\"gradient\":[");
  ASSERT_NE(pos, std::string::npos);
  const auto digit = pos + 12;
  text[digit] = text[digit] == '1' ? '2' : '1';
  std::istringstream is(text);
  EXPECT_FALSE(replay_transcript(is).matches);
}

TEST(TranscriptTest, ReplayRejectsMalformedInput) {
  std::istringstream garbage("{not json}\n");
  EXPECT_THROW(replay_transcript(garbage), ParseError);
  std::istringstream truncated("{\"event\":\"config\"}\n");
  EXPECT_THROW(replay_transcript(truncated), ParseError);
}

TEST(TranscriptTest, WriteMatchesToJsonl) {
  const Transcript t = three_worker();
  std::ostringstream os;
  write_jsonl(os, t);
  EXPECT_EQ(os.str(), to_jsonl(t));
}

}  // namespace
}  // namespace bgc
