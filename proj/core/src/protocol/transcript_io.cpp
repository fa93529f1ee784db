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

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "bgc/coding/decoding.hpp"
#include "bgc/coding/ecc.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/protocol.hpp"

namespace bgc {

namespace {

using nlohmann::ordered_json;

ordered_json values(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

ordered_json indices(const std::vector<std::size_t>& v) {
  ordered_json out = ordered_json::array();
  for (auto j : v) out.push_back(j + 1);
  return out;
}

ordered_json range(SampleRange r) { return ordered_json::array({r.begin + 1, r.end}); }

const char* path_name(DecodePath path) {
  return path == DecodePath::kAgreement ? "agreement" : "error-correction";
}

void emit(std::ostream& os, const ordered_json& record) { os << record.dump() << '\n'; }

void write_match(std::ostream& os, std::size_t round, const Conflict& conflict,
                 const MatchResult& match) {
  for (const auto& level : match.levels) {
    emit(os, {{"event", "query"},
              {"round", round},
              {"kind", "tournament"},
              {"level", level.level},
              {"range", range(level.queried)},
              {"coordinate", conflict.coordinate + 1}});
    emit(os, {{"event", "match-level"},
              {"round", round},
              {"level", level.level},
              {"node", range(level.node)},
              {"queried", range(level.queried)},
              {"workers", indices(level.workers)},
              {"responses", values(level.responses)},
              {"left_claims", ordered_json::array({level.left_claims[0].value(),
                                                   level.left_claims[1].value()})},
              {"right_claims", ordered_json::array({level.right_claims[0].value(),
                                                    level.right_claims[1].value()})},
              {"descend", level.descend_left ? "left" : "right"}});
  }
  emit(os, {{"event", "local-compute"},
            {"round", round},
            {"sample", match.leaf + 1},
            {"value", values(match.truth)}});
  ordered_json claims = ordered_json::array();
  for (const auto& c : match.claims) {
    claims.push_back({{"worker", c.worker + 1},
                      {"assigned", c.assigned},
                      {"committed", c.committed.value()},
                      {"claimed", c.claimed.value()},
                      {"truthful", c.truthful}});
  }
  emit(os, {{"event", "elimination"},
            {"round", round},
            {"workers", indices(match.malicious)},
            {"claims", claims}});
}

Vector parse_values(const ordered_json& arr, std::uint64_t q) {
  Vector out;
  for (const auto& x : arr) out.emplace_back(x.get<std::uint64_t>(), q);
  return out;
}

std::vector<std::size_t> parse_indices(const ordered_json& arr) {
  std::vector<std::size_t> out;
  for (const auto& x : arr) {
    const auto j = x.get<std::size_t>();
    if (j == 0) throw ParseError("worker indices in transcripts are 1-based");
    out.push_back(j - 1);
  }
  return out;
}

}  // namespace

void write_jsonl(std::ostream& os, const Transcript& t) {
  emit(os, {{"event", "config"},
            {"n", t.n},
            {"s", t.s},
            {"u", t.u},
            {"r", t.r},
            {"p", t.p},
            {"d", t.d},
            {"q", t.q},
            {"omega", values(t.points)},
            {"assignment", t.assignment_text}});
  emit(os, {{"event", "query"},
            {"round", 0},
            {"kind", "initial"},
            {"range", range(SampleRange{0, t.p})}});
  ordered_json responses = ordered_json::array();
  for (std::size_t j = 0; j < t.initial_responses.cols(); ++j) {
    responses.push_back(values(t.initial_responses.column_vector(j)));
  }
  emit(os, {{"event", "response-set"}, {"round", 0}, {"responses", responses}});

  for (const auto& round : t.rounds) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : round.plan.groups()) groups.push_back(indices(g.members));
    ordered_json group_values = ordered_json::array();
    for (const auto& v : round.group_values) group_values.push_back(values(v));
    emit(os, {{"event", "decode"},
              {"round", round.round},
              {"method", "groups"},
              {"unidentified", round.unidentified},
              {"root", indices(round.plan.root)},
              {"satellites", indices(round.plan.satellites)},
              {"groups", groups},
              {"values", group_values}});
    if (round.conflict) {
      emit(os, {{"event", "conflict"},
                {"round", round.round},
                {"groups", ordered_json::array({round.conflict->first + 1,
                                                round.conflict->second + 1})},
                {"coordinate", round.conflict->coordinate + 1}});
    }
    if (round.conflict && round.match) write_match(os, round.round, *round.conflict, *round.match);
  }
  if (t.path == DecodePath::kErrorCorrection) {
    emit(os, {{"event", "decode"},
              {"round", t.rounds.size() + 1},
              {"method", "ecc"},
              {"identified", indices(t.eliminated)},
              {"value", values(t.gradient)}});
  }
  emit(os, {{"event", "final"},
            {"path", path_name(t.path)},
            {"gradient", values(t.gradient)},
            {"c", t.local_computations},
            {"C_oh", t.communication_overhead},
            {"rounds", t.interactive_rounds()},
            {"downlink_bits", t.downlink_bits},
            {"eliminated", indices(t.eliminated)}});
}

std::string to_jsonl(const Transcript& t) {
  std::ostringstream os;
  write_jsonl(os, t);
  return os.str();
}

ReplayResult replay_transcript(std::istream& is) {
  std::optional<ordered_json> config;
  std::optional<ordered_json> initial;
  std::optional<ordered_json> last_groups;
  std::optional<ordered_json> final_record;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      throw ParseError("transcript line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string event = rec.value("event", "");
    if (event == "config") {
      config = rec;
    } else if (event == "response-set" && rec.value("round", 1) == 0) {
      initial = rec;
    } else if (event == "decode" && rec.value("method", "") == "groups") {
      last_groups = rec;
    } else if (event == "final") {
      final_record = rec;
    }
  }
  if (!config || !initial || !final_record) {
    throw ParseError("transcript lacks a config, initial response-set or final record");
  }

  try {
    const auto q = config->at("q").get<std::uint64_t>();
    const CodeContext code = CodeContext::with_points(
        config->at("s").get<std::size_t>(), config->at("u").get<std::size_t>(),
        parse_values(config->at("omega"), q));
    const auto d = config->at("d").get<std::size_t>();
    const auto& cols = initial->at("responses");
    if (cols.size() != code.n()) throw ParseError("response-set has the wrong number of workers");
    Matrix responses(d, code.n(), q);
    for (std::size_t j = 0; j < code.n(); ++j) {
      const Vector col = parse_values(cols[j], q);
      if (col.size() != d) throw ParseError("response of the wrong dimension");
      responses.set_column(j, col);
    }

    ReplayResult result;
    result.recorded = parse_values(final_record->at("gradient"), q);
    const std::string path = final_record->at("path").get<std::string>();
    if (path == "agreement") {
      if (!last_groups) throw ParseError("agreement path without a decode record");
      bool agree = true;
      for (const auto& members : last_groups->at("groups")) {
        const Vector value = group_response(responses, combining_vector(code, Group{parse_indices(members)}));
        if (result.recomputed.empty()) {
          result.recomputed = value;
        } else if (!(value == result.recomputed)) {
          agree = false;
        }
      }
      result.matches = agree && result.recomputed == result.recorded;
    } else if (path == "error-correction") {
      const auto identified = parse_indices(final_record->at("eliminated"));
      ResponseMatrix input{Vector(config->at("p").get<std::size_t>(), FieldElement::one(q)),
                           responses, std::vector<bool>(code.n(), true)};
      result.recomputed = ecc_decode(code, input, identified);
      result.matches = result.recomputed == result.recorded;
    } else {
      throw ParseError("unknown decode path '" + path + "'");
    }
    return result;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace bgc
