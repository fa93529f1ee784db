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

#include "bgc/protocol/protocol.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bgc/coding/decoding.hpp"
#include "bgc/coding/ecc.hpp"
#include "bgc/errors.hpp"

namespace bgc {

namespace {

// Everything the main node and the simulated workers share during one run.
class ProtocolRun {
 public:
  ProtocolRun(const CodeContext& code, const AssignmentMatrix& assignment, GradientOracle& oracle,
              AdversaryStrategy& adversary, const ProtocolConfig& config)
      : code_(code),
        assignment_(assignment),
        oracle_(oracle),
        adversary_(adversary),
        config_(config),
        encoding_(build_encoding_matrix(
            code, assignment,
            Vector(assignment.samples(), FieldElement::one(code.modulus())))),
        tree_(assignment.samples()) {
    if (oracle.samples() != assignment.samples()) {
      throw DimensionError("gradient oracle has " + std::to_string(oracle.samples()) +
                           " samples, assignment has " + std::to_string(assignment.samples()));
    }
    if (oracle.gradients().modulus() != code.modulus()) {
      throw ModulusMismatch("gradients and code live in different fields");
    }
    for (auto j : adversary.controlled()) {
      if (j >= code.n()) throw InvalidParams("adversary controls a nonexistent worker");
    }
  }

  ProtocolResult run() {
    const std::size_t calls_before = oracle_.calls();
    Transcript& t = transcript_;
    t.n = code_.n();
    t.s = code_.s();
    t.u = code_.u();
    t.r = code_.r();
    t.p = assignment_.samples();
    t.d = oracle_.dimension();
    t.q = code_.modulus();
    t.points.assign(code_.points().begin(), code_.points().end());
    t.assignment_text = to_text(assignment_);

    adversary_.attach(SchemeView{code_, assignment_, encoding_, t.d});
    collect_initial_responses();

    std::vector<bool> eliminated(code_.n(), false);
    std::size_t unidentified = code_.s();
    std::size_t round = 0;
    while (true) {
      if (unidentified + 1 <= code_.u()) {
        decode_with_ecc();
        break;
      }
      ++round;
      std::vector<std::size_t> active;
      for (std::size_t j = 0; j < code_.n(); ++j) {
        if (!eliminated[j]) active.push_back(j);
      }
      GroupingOptions grouping = config_.grouping;
      grouping.round = round;

      RoundRecord rec;
      rec.round = round;
      rec.unidentified = unidentified;
      rec.plan = form_groups(active, code_.r(), unidentified, grouping);
      const auto groups = rec.plan.groups();
      for (const auto& g : groups) {
        rec.group_values.push_back(
            group_response(t.initial_responses, combining_vector(code_, g)));
      }

      const auto verdict = detect_contradiction(rec.group_values);
      if (const auto* agreed = std::get_if<Agreement>(&verdict)) {
        t.path = DecodePath::kAgreement;
        t.gradient = agreed->value;
        t.rounds.push_back(std::move(rec));
        break;
      }
      const Conflict conflict = std::get<Conflict>(verdict);
      rec.conflict = conflict;

      MatchSetup setup{code_,
                       assignment_,
                       encoding_,
                       groups[conflict.first],
                       groups[conflict.second],
                       conflict.coordinate,
                       round,
                       t.initial_responses.row_vector(conflict.coordinate)};
      MatchResult match = run_match(
          setup, tree_,
          [this](const Query& query, std::size_t worker) { return tournament_answer(query, worker); },
          oracle_);

      const std::size_t competitors = match.levels.empty() ? 0 : match.levels.front().workers.size();
      t.communication_overhead += competitors * match.levels.size();
      t.downlink_bits += match.levels.size();

      if (match.malicious.size() > unidentified) {
        t.rounds.push_back(std::move(rec));
        throw AdversaryBudgetExceeded("round " + std::to_string(round) + " exposed " +
                                      std::to_string(match.malicious.size()) +
                                      " malicious workers but at most " +
                                      std::to_string(unidentified) + " can remain");
      }
      for (auto j : match.malicious) {
        eliminated[j] = true;
        t.eliminated.push_back(j);
      }
      unidentified -= match.malicious.size();
      rec.match = std::move(match);
      t.rounds.push_back(std::move(rec));
    }

    std::sort(t.eliminated.begin(), t.eliminated.end());
    t.local_computations = oracle_.calls() - calls_before;
    return ProtocolResult{t.gradient, t};
  }

 private:
  void collect_initial_responses() {
    const std::size_t p = assignment_.samples();
    const Query query{QueryKind::kInitial, 0, 0, SampleRange{0, p}, std::nullopt};
    Matrix received = response_matrix(oracle_.gradients(), encoding_);
    for (std::size_t j = 0; j < code_.n(); ++j) {
      if (!adversary_.controls(j)) continue;
      Vector sent = adversary_.respond(query, j, received.column_vector(j));
      if (sent.size() != received.rows()) {
        throw DimensionError("adversary sent a response of the wrong length");
      }
      received.set_column(j, sent);
    }
    transcript_.initial_responses = std::move(received);
  }

  FieldElement tournament_answer(const Query& query, std::size_t worker) {
    const std::size_t c = *query.coordinate;
    const std::uint64_t q = code_.modulus();
    FieldElement honest = FieldElement::zero(q);
    for (std::size_t i = query.range.begin; i < query.range.end; ++i) {
      honest += oracle_.gradients()(c, i) * encoding_.coefficients(i, worker);
    }
    if (!adversary_.controls(worker)) return honest;
    const Vector sent = adversary_.respond(query, worker, Vector{honest});
    if (sent.size() != 1) throw DimensionError("tournament answers are single symbols");
    return sent.front();
  }

  void decode_with_ecc() {
    Transcript& t = transcript_;
    const std::size_t p = assignment_.samples();
    ResponseMatrix responses{Vector(p, FieldElement::one(code_.modulus())), t.initial_responses,
                             std::vector<bool>(code_.n(), true)};
    std::vector<std::size_t> identified = t.eliminated;
    std::sort(identified.begin(), identified.end());
    try {
      t.gradient = ecc_decode(code_, responses, identified);
    } catch (const DecodeFailure& e) {
      throw AdversaryBudgetExceeded(std::string("error-correction decode failed: ") + e.what());
    }
    t.path = DecodePath::kErrorCorrection;
  }

  const CodeContext& code_;
  const AssignmentMatrix& assignment_;
  GradientOracle& oracle_;
  AdversaryStrategy& adversary_;
  const ProtocolConfig& config_;
  EncodingMatrix encoding_;
  MatchTree tree_;
  Transcript transcript_;
};

}  // namespace

std::size_t Transcript::interactive_rounds() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const RoundRecord& r) { return r.match.has_value(); }));
}

ProtocolResult run_protocol(const CodeContext& code, const AssignmentMatrix& assignment,
                            GradientOracle& oracle, AdversaryStrategy& adversary,
                            const ProtocolConfig& config) {
  ProtocolRun run(code, assignment, oracle, adversary, config);
  return run.run();
}

TheoremBounds theorem_bounds(const CodeContext& code, std::size_t samples) {
  const std::size_t budget = code.s() + 1 - code.u();
  return TheoremBounds{budget, (code.r() + 2) * budget * ceil_log2(samples), budget};
}

bool within_bounds(const Transcript& t, const TheoremBounds& bounds) {
  return t.local_computations <= bounds.max_local_computations &&
         t.communication_overhead <= bounds.max_communication_overhead &&
         t.interactive_rounds() <= bounds.max_rounds;
}

}  // namespace bgc
