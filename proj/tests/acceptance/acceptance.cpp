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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bgc/adversary/strategies.hpp"
#include "bgc/adversary/symmetrization.hpp"
#include "bgc/algebra/structured.hpp"
#include "bgc/coding/decoding.hpp"
#include "bgc/coding/ecc.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/errors.hpp"
#include "bgc/harness/config.hpp"
#include "bgc/harness/simulate.hpp"
#include "bgc/harness/sweep.hpp"
#include "bgc/protocol/grouping.hpp"
#include "bgc/protocol/protocol.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace bgc;

constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kSweepSeconds = 120.0;
constexpr std::size_t kVandermondeMaxSize = 8;
constexpr std::size_t kVandermondeTrials = 200;
constexpr std::size_t kCauchyTrials = 1000;
constexpr std::size_t kCauchyMaxK = 5;
constexpr std::size_t kMaskTrials = 500;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::size_t> everyone(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Outcome worked_example() {
  Outcome out;
  const auto start = Clock::now();
  const auto run = simulate(worked_example_config());
  const double elapsed = seconds_since(start);
  const auto& t = run.transcript;
  if (!run.metrics.error.empty()) out.fail(run.metrics.error);
  if (!(t.gradient == run.expected)) out.fail("gradient differs from the true sum");
  if (t.eliminated != std::vector<std::size_t>{2}) out.fail("eliminated set is not {W3}");
  if (t.local_computations != 1) out.fail("c = " + std::to_string(t.local_computations));
  if (t.communication_overhead > 6) out.fail("C_oh = " + std::to_string(t.communication_overhead));
  if (t.interactive_rounds() > 1) out.fail("more than one interactive round");
  if (elapsed >= kWorkedExampleSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    out.detail = "W3 eliminated, c=1, C_oh=" + std::to_string(t.communication_overhead) + ", " +
                 std::to_string(elapsed) + " s";
  }
  return out;
}

Outcome bound_suite() {
  Outcome out;
  const auto start = Clock::now();
  const auto report = run_sweep(theorem_grid());
  const double elapsed = seconds_since(start);
  const auto& s = report.summary;
  if (report.runs.empty()) out.fail("no runs");
  for (const auto& r : report.runs) {
    if (!r.error.empty()) {
      out.fail("run raised: " + r.error);
      break;
    }
  }
  if (s.incorrect != 0) out.fail(std::to_string(s.incorrect) + " incorrect outputs");
  if (s.bound_violations != 0) out.fail(std::to_string(s.bound_violations) + " bound violations");
  if (elapsed >= kSweepSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    out.detail = std::to_string(s.runs) + " runs, " + std::to_string(report.rejected.size()) +
                 " infeasible rows skipped, " + std::to_string(elapsed) + " s";
  }
  return out;
}

struct GroupingInstance {
  std::size_t n, s, u;
};

constexpr GroupingInstance kInstances[] = {{5, 2, 1}, {6, 2, 2}};

Outcome full_grouping_resists() {
  Outcome out;
  std::size_t systems = 0;
  for (const auto& in : kInstances) {
    const auto code = CodeContext::build(in.n, in.s, in.u);
    const FieldElement lambda = FieldElement::one(code.modulus());
    for (std::size_t st = in.u; st <= in.s; ++st) {
      const auto plan = form_groups(everyone(in.n), code.r(), st);
      const auto b = build_decoding_matrix(code, plan.groups());
      for (const auto& attack : gen::subsets(in.n, st)) {
        ++systems;
        const auto system = symmetrization_system(b, attack, lambda);
        if (!system.pivot_in_augmented_last_column || system.kind != SolveKind::kInconsistent) {
          std::ostringstream os;
          os << "n=" << in.n << " s_t=" << st << " attack set of size " << attack.size()
             << " is consistent";
          out.fail(os.str());
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(systems) + " systems certified inconsistent";
  return out;
}

Outcome fewer_groups_fall() {
  Outcome out;
  gen::Gen g(kSeed + 4);
  std::size_t attacks = 0;
  const std::size_t d = 2;
  for (const auto& in : kInstances) {
    const auto code = CodeContext::build(in.n, in.s, in.u);
    const std::uint64_t q = code.modulus();
    const auto a = make_cyclic(in.n, in.n, code.replication());
    const Vector ones(in.n, FieldElement::one(q));
    const auto w = build_encoding_matrix(code, a, ones);
    for (std::size_t st = in.u; st <= in.s; ++st) {
      auto groups = form_groups(everyone(in.n), code.r(), st).groups();
      groups.pop_back();
      const auto b = build_decoding_matrix(code, groups);
      for (const auto& attack : gen::subsets(in.n, st)) {
        const auto errors = symmetrization_attack(code, b, attack, d, FieldElement::one(q));
        if (!errors) continue;
        ++attacks;
        const Matrix grad = g.matrix(d, in.n, q);
        const Vector truth = grad * ones;
        const Matrix received = response_matrix(grad, w) + *errors;
        std::vector<Vector> decoded;
        for (const auto& group : groups) decoded.push_back(received * combining_vector(code, group));
        const bool identical = std::all_of(decoded.begin(), decoded.end(),
                                           [&](const Vector& v) { return v == decoded.front(); });
        if (!identical || decoded.front() == truth) {
          out.fail("attack with " + std::to_string(st) + " groups did not symmetrize");
        }
      }
      // The satellites of the remaining groups always form a working attack set.
      const auto plan = form_groups(everyone(in.n), code.r(), st);
      const std::vector<std::size_t> satellites(plan.satellites.begin(), plan.satellites.end() - 1);
      if (!symmetrization_attack(code, b, satellites, d, FieldElement::one(q))) {
        out.fail("satellite attack infeasible at n=" + std::to_string(in.n) +
                 " s_t=" + std::to_string(st));
      }
    }
  }
  if (attacks == 0) out.fail("no attack attempted");
  if (out.pass) {
    out.detail = std::to_string(attacks) + " feasible attack sets, all groups agree on a wrong value";
  }
  return out;
}

Outcome vandermonde_closed_form() {
  Outcome out;
  gen::Gen g(kSeed + 5);
  std::size_t checks = 0;
  for (std::uint64_t q : {std::uint64_t{101}, kDefaultModulus}) {
    for (std::size_t size = 1; size <= kVandermondeMaxSize; ++size) {
      for (std::size_t trial = 0; trial < kVandermondeTrials; ++trial) {
        ++checks;
        const Vector points = g.distinct(size, q);
        const Vector closed = vandermonde_last_column_of_inverse(points);
        const Matrix v = vandermonde(points, size);
        const Vector by_rows = inverse(v).row_vector(size - 1);
        const Vector by_cols = inverse(v.transpose()).column_vector(size - 1);
        if (!(closed == by_rows) || !(closed == by_cols)) {
          out.fail("mismatch at q=" + std::to_string(q) + " size=" + std::to_string(size));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " point sets agree exactly";
  return out;
}

Outcome cauchy_nonzero() {
  Outcome out;
  gen::Gen g(kSeed + 6);
  std::size_t checks = 0;
  for (std::size_t trial = 0; trial < kCauchyTrials; ++trial) {
    const std::size_t k = 1 + trial % kCauchyMaxK;
    const std::uint64_t q = trial % 2 == 0 ? kDefaultModulus : 101;
    const Vector all = g.distinct(2 * k + 1, q);
    const Vector zetas(all.begin(), all.begin() + k);
    const Vector deltas(all.begin() + k, all.end());
    ++checks;
    if (cauchy_like_det(zetas, deltas).is_zero()) out.fail("zero determinant at k=" + std::to_string(k));
  }
  const std::uint64_t q = 11;
  std::function<void(std::vector<std::uint64_t>&, std::size_t, std::size_t)> extend;
  extend = [&](std::vector<std::uint64_t>& chosen, std::size_t k, std::size_t total) {
    if (chosen.size() == total) {
      ++checks;
      const Vector zetas = gen::lift({chosen.begin(), chosen.begin() + k}, q);
      const Vector deltas = gen::lift({chosen.begin() + k, chosen.end()}, q);
      const FieldElement det = cauchy_like_det(zetas, deltas);
      oracle::Table m(k + 1, std::vector<std::uint64_t>(k + 1, 1));
      for (std::size_t row = 0; row <= k; ++row) {
        for (std::size_t col = 0; col < k; ++col) {
          m[row][col] = oracle::inv(oracle::sub(chosen[col], chosen[k + row], q), q);
        }
      }
      if (det.is_zero() || det.value() != oracle::det(m, q)) out.fail("exhaustive q=11 failure");
      return;
    }
    for (std::uint64_t x = 0; x < q; ++x) {
      if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
      chosen.push_back(x);
      extend(chosen, k, total);
      chosen.pop_back();
    }
  };
  for (std::size_t k = 0; k <= 2; ++k) {
    std::vector<std::uint64_t> chosen;
    extend(chosen, k, 2 * k + 1);
  }
  if (out.pass) out.detail = std::to_string(checks) + " determinants nonzero";
  return out;
}

Outcome ecc_path() {
  Outcome out;
  gen::Gen g(kSeed + 7);
  const std::uint64_t q = 11;
  const std::size_t n = 7;
  const auto code = CodeContext::build(n, 2, 2, q);
  const auto a = make_cyclic(n, n, code.replication());
  const Vector ones(n, FieldElement::one(q));
  const auto w = build_encoding_matrix(code, a, ones);
  const Matrix grad = g.matrix(2, n, q);
  const Vector truth = grad * ones;
  const Matrix honest = response_matrix(grad, w);
  std::size_t checks = 0;
  for (std::size_t known = 0; known < n; ++known) {
    for (std::size_t corrupt = 0; corrupt < n; ++corrupt) {
      if (corrupt == known) continue;
      for (std::uint64_t e = 1; e < q; ++e) {
        ++checks;
        Matrix received = honest;
        received(0, known) += g.element(q);
        received(1, known) += g.element(q);
        received(0, corrupt) += FieldElement(e, q);
        received(1, corrupt) += FieldElement((e * 3) % q, q);
        const std::vector<std::size_t> identified{known};
        try {
          if (!(ecc_decode(code, ResponseMatrix{ones, received, std::vector<bool>(n, true)},
                           identified) == truth)) {
            out.fail("wrong gradient with W" + std::to_string(corrupt + 1) + " corrupt");
          }
        } catch (const DecodeFailure& err) {
          out.fail(err.what());
        }
      }
    }
  }
  struct Config {
    std::size_t n, s, p;
  };
  std::size_t runs = 0;
  for (const Config c : {Config{3, 1, 3}, Config{5, 2, 5}, Config{7, 3, 9}, Config{8, 3, 16}}) {
    const auto full = CodeContext::build(c.n, c.s, c.s + 1);
    const auto assignment = make_cyclic(c.n, c.p, full.replication());
    for (int trial = 0; trial < 25; ++trial) {
      ++runs;
      auto adversary = make_random_corruption(g.subset(c.n, c.s), g.next(), Persistence::kAlways);
      GradientOracle oracle(g.matrix(2, c.p, full.modulus()));
      const auto result = run_protocol(full, assignment, oracle, *adversary);
      const auto& t = result.transcript;
      if (!(result.gradient == oracle.full_gradient())) out.fail("u=s+1 protocol output wrong");
      if (t.interactive_rounds() != 0 || t.local_computations != 0 ||
          t.communication_overhead != 0 || t.path != DecodePath::kErrorCorrection) {
        out.fail("u=s+1 protocol used interaction");
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(checks) + " error patterns decoded, " + std::to_string(runs) +
                 " non-interactive runs";
  }
  return out;
}

Outcome restriction_matches() {
  Outcome out;
  gen::Gen g(kSeed + 8);
  for (std::size_t trial = 0; trial < kMaskTrials; ++trial) {
    const auto in = g.instance(8);
    const auto code = CodeContext::build(in.n, in.s, in.u, in.q);
    const auto a = g.assignment(in);
    const auto full = build_encoding_matrix(code, a, Vector(in.p, FieldElement::one(in.q)));
    std::vector<bool> mask(in.p);
    Vector query;
    for (std::size_t i = 0; i < in.p; ++i) {
      mask[i] = g.uniform(0, 1) == 1;
      query.push_back(mask[i] ? FieldElement::one(in.q) : FieldElement::zero(in.q));
    }
    const auto restricted = restrict_encoding(full, mask);
    const auto direct = build_encoding_matrix(code, a, query);
    if (!(restricted.coefficients == direct.coefficients)) {
      out.fail("mismatch at n=" + std::to_string(in.n) + " p=" + std::to_string(in.p));
    }
  }
  if (out.pass) out.detail = std::to_string(kMaskTrials) + " masks agree entrywise";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"AC1 worked example", worked_example},
      {"AC2 bound suite", bound_suite},
      {"AC3 full grouping resists symmetrization", full_grouping_resists},
      {"AC4 fewer groups are symmetrized", fewer_groups_fall},
      {"AC5 Vandermonde inverse closed form", vandermonde_closed_form},
      {"AC6 Cauchy-like determinant", cauchy_nonzero},
      {"AC7 error-correcting path", ecc_path},
      {"AC8 restricted encoding", restriction_matches},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome result;
    try {
      result = c.check();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::cout << (result.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << result.detail
              << std::endl;
    if (!result.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
