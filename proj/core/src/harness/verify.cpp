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

#include "bgc/harness/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "bgc/adversary/symmetrization.hpp"
#include "bgc/algebra/structured.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/coding/decoding.hpp"
#include "bgc/coding/ecc.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/grouping.hpp"

namespace bgc {

namespace {

struct Instance {
  std::size_t n, s, u;
};

// Settings exercised by the grouping checks.
constexpr Instance kGroupingInstances[] = {{5, 2, 1}, {6, 2, 2}};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << 'W' << v[k] + 1;
  os << '}';
  return os.str();
}

// Calls `visit` with every size-k subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    visit(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Vector random_distinct(std::mt19937_64& rng, std::size_t count, std::uint64_t q, bool nonzero) {
  std::uniform_int_distribution<std::uint64_t> dist(nonzero ? 1 : 0, q - 1);
  Vector out;
  while (out.size() < count) {
    FieldElement x(dist(rng), q);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint64_t q) {
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  Matrix m(rows, cols, q);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElement(dist(rng), q);
  }
  return m;
}

std::vector<std::size_t> all_workers(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

VerifyReport verify_lemma2(std::uint64_t seed) {
  VerifyReport report{"lemma2", 0, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t q = kDefaultModulus;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t s = 1; s < n; ++s) {
      for (std::size_t u = 1; u <= s + 1 && s + u <= n; ++u) {
        const CodeContext code = CodeContext::build(n, s, u, q);
        const std::size_t p = n + rng() % 3;
        const AssignmentMatrix a = make_random_regular(n, p, s + u, rng());
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        Vector query;
        for (std::size_t i = 0; i < p; ++i) query.emplace_back(dist(rng), q);
        const EncodingMatrix w = build_encoding_matrix(code, a, query);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t i = 0; i < p; ++i) {
            if (a(j, i)) continue;
            ++report.checks;
            if (!w.coefficients(i, j).is_zero()) {
              std::ostringstream os;
              os << "n=" << n << " s=" << s << " u=" << u << ": W(" << i + 1 << "," << j + 1
                 << ") nonzero outside the assignment";
              report.counterexamples.push_back(os.str());
            }
          }
        }
        for_each_subset(n, code.r() + 1, [&](const std::vector<std::size_t>& members) {
          ++report.checks;
          const Vector b = combining_vector(code, Group{members});
          if (!(w.coefficients * b == query)) {
            std::ostringstream os;
            os << "n=" << n << " s=" << s << " u=" << u << ": group " << join(members)
               << " does not reproduce the query";
            report.counterexamples.push_back(os.str());
          }
        });
      }
    }
  }
  return report;
}

VerifyReport verify_lemma3() {
  VerifyReport report{"lemma3", 0, {}};
  for (const auto& inst : kGroupingInstances) {
    const CodeContext code = CodeContext::build(inst.n, inst.s, inst.u);
    const FieldElement lambda = FieldElement::one(code.modulus());
    for (std::size_t st = inst.u; st <= inst.s; ++st) {
      const auto workers = all_workers(inst.n);
      const GroupingPlan plan = form_groups(workers, code.r(), st);
      const DecodingMatrix b = build_decoding_matrix(code, plan.groups());
      for_each_subset(inst.n, st, [&](const std::vector<std::size_t>& attack) {
        ++report.checks;
        const LinearSolveOutcome out = symmetrization_system(b, attack, lambda);
        if (!out.pivot_in_augmented_last_column) {
          std::ostringstream os;
          os << "n=" << inst.n << " s=" << inst.s << " u=" << inst.u << " s_t=" << st
             << ": attack set " << join(attack) << " symmetrizes all groups";
          report.counterexamples.push_back(os.str());
        }
      });
    }
  }
  return report;
}

VerifyReport verify_theorem_optimality(std::uint64_t seed) {
  VerifyReport report{"theorem-optimality", 0, {}};
  std::mt19937_64 rng(seed);
  for (const auto& inst : kGroupingInstances) {
    const CodeContext code = CodeContext::build(inst.n, inst.s, inst.u);
    const std::uint64_t q = code.modulus();
    const FieldElement lambda = FieldElement::one(q);
    const AssignmentMatrix a = make_cyclic(inst.n, inst.n, code.replication());
    const EncodingMatrix w =
        build_encoding_matrix(code, a, Vector(inst.n, FieldElement::one(q)));
    for (std::size_t st = inst.u; st <= inst.s; ++st) {
      ++report.checks;
      const GroupingPlan plan = form_groups(all_workers(inst.n), code.r(), st);
      std::vector<Group> groups = plan.groups();
      groups.pop_back();
      const DecodingMatrix b = build_decoding_matrix(code, groups);

      std::vector<std::size_t> preference(plan.satellites.begin(), plan.satellites.end() - 1);
      preference.insert(preference.end(), plan.root.begin(), plan.root.end());
      for (std::size_t j = 0; j < inst.n; ++j) {
        if (std::find(preference.begin(), preference.end(), j) == preference.end()) {
          preference.push_back(j);
        }
      }
      std::ostringstream tag;
      tag << "n=" << inst.n << " s=" << inst.s << " u=" << inst.u << " s_t=" << st << ": ";
      const auto attack = choose_attack_set(b, preference, st);
      if (!attack) {
        report.counterexamples.push_back(tag.str() + "no attack set spans the all-one vector");
        continue;
      }
      const std::size_t d = 2;
      const auto errors = symmetrization_attack(code, b, *attack, d, lambda);
      if (!errors) {
        report.counterexamples.push_back(tag.str() + "attack system inconsistent for " + join(*attack));
        continue;
      }
      const Matrix g = random_matrix(rng, d, inst.n, q);
      const Vector truth = g * Vector(inst.n, FieldElement::one(q));
      const Matrix received = response_matrix(g, w) + *errors;
      std::optional<Vector> common;
      bool identical = true;
      for (const auto& group : groups) {
        const Vector value = received * combining_vector(code, group);
        if (!common) common = value;
        identical = identical && value == *common;
      }
      if (!identical || *common == truth) {
        report.counterexamples.push_back(tag.str() + "attack on " + join(*attack) +
                                         (identical ? " decodes the true gradient" : " leaves groups disagreeing"));
      }
    }
  }
  return report;
}

VerifyReport verify_vandermonde(std::uint64_t seed) {
  VerifyReport report{"vandermonde", 0, {}};
  std::mt19937_64 rng(seed);
  for (const std::uint64_t q : {std::uint64_t{101}, kDefaultModulus}) {
    for (std::size_t size = 1; size <= 8; ++size) {
      for (int trial = 0; trial < 200; ++trial) {
        ++report.checks;
        const Vector points = random_distinct(rng, size, q, false);
        const Matrix inv = inverse(vandermonde(points, size));
        const Vector closed = vandermonde_last_column_of_inverse(points);
        if (!(closed == inv.row_vector(size - 1))) {
          std::ostringstream os;
          os << "q=" << q << " size=" << size << " points:";
          for (const auto& x : points) os << ' ' << x.value();
          report.counterexamples.push_back(os.str());
        }
      }
    }
  }
  return report;
}

VerifyReport verify_cauchy(std::uint64_t seed) {
  VerifyReport report{"cauchy", 0, {}};
  std::mt19937_64 rng(seed);
  auto check = [&](const Vector& values, std::size_t k) {
    ++report.checks;
    const std::span<const FieldElement> all(values);
    if (cauchy_like_det(all.first(k), all.subspan(k)).is_zero()) {
      std::ostringstream os;
      os << "q=" << values.front().modulus() << " k=" << k << " values:";
      for (const auto& x : values) os << ' ' << x.value();
      report.counterexamples.push_back(os.str());
    }
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const std::uint64_t q = trial % 2 == 0 ? kDefaultModulus : 101;
    check(random_distinct(rng, 2 * k + 1, q, false), k);
  }
  const std::uint64_t q = 11;
  for (std::size_t k = 0; k <= 2; ++k) {
    const std::size_t len = 2 * k + 1;
    std::vector<std::uint64_t> digits(len, 0);
    while (true) {
      std::vector<std::uint64_t> sorted = digits;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        Vector values;
        for (auto v : digits) values.emplace_back(v, q);
        check(values, k);
      }
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  return report;
}

VerifyReport verify_ecc(std::uint64_t seed) {
  VerifyReport report{"ecc", 0, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t q = 11;
  const CodeContext code = CodeContext::build(7, 2, 2, q);
  const AssignmentMatrix a = make_cyclic(7, 7, code.replication());
  const Vector ones(7, FieldElement::one(q));
  const EncodingMatrix w = build_encoding_matrix(code, a, ones);
  const Matrix g = random_matrix(rng, 1, 7, q);
  const Vector truth = g * ones;
  const Matrix honest = response_matrix(g, w);
  for (std::size_t identified = 0; identified < 7; ++identified) {
    for (std::size_t corrupt = 0; corrupt < 7; ++corrupt) {
      if (corrupt == identified) continue;
      for (std::uint64_t e = 1; e < q; ++e) {
        ++report.checks;
        Matrix received = honest;
        received(0, identified) += FieldElement(rng() % q, q);
        received(0, corrupt) += FieldElement(e, q);
        const ResponseMatrix input{ones, received, std::vector<bool>(7, true)};
        const std::vector<std::size_t> known{identified};
        std::ostringstream os;
        os << "identified W" << identified + 1 << ", corrupt W" << corrupt + 1 << ", e=" << e;
        try {
          if (!(ecc_decode(code, input, known) == truth)) {
            report.counterexamples.push_back(os.str() + ": wrong gradient");
          }
        } catch (const DecodeFailure& err) {
          report.counterexamples.push_back(os.str() + ": " + err.what());
        }
      }
    }
  }
  return report;
}

VerifyReport verify_remark1(std::uint64_t seed) {
  VerifyReport report{"remark1", 0, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t q = kDefaultModulus;
  while (report.checks < 500) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t s = 1 + rng() % (n - 1);
    const std::size_t u = 1 + rng() % std::min(s + 1, n - s);
    const std::size_t p = n + rng() % 4;
    const CodeContext code = CodeContext::build(n, s, u, q);
    const AssignmentMatrix a = make_random_regular(n, p, s + u, rng());
    const Vector ones(p, FieldElement::one(q));
    const EncodingMatrix full = build_encoding_matrix(code, a, ones);
    std::vector<bool> mask(p);
    Vector query;
    for (std::size_t i = 0; i < p; ++i) {
      mask[i] = (rng() & 1U) != 0;
      query.push_back(mask[i] ? FieldElement::one(q) : FieldElement::zero(q));
    }
    ++report.checks;
    const EncodingMatrix restricted = restrict_encoding(full, mask);
    const EncodingMatrix direct = build_encoding_matrix(code, a, query);
    if (!(restricted.coefficients == direct.coefficients) || !(restricted.query == direct.query)) {
      std::ostringstream os;
      os << "n=" << n << " s=" << s << " u=" << u << " p=" << p << " mask:";
      for (bool m : mask) os << (m ? '1' : '0');
      report.counterexamples.push_back(os.str());
    }
  }
  return report;
}

std::vector<std::string> verification_names() {
  return {"lemma2", "lemma3", "theorem-optimality", "vandermonde", "cauchy", "ecc", "remark1"};
}

VerifyReport run_verification(std::string_view which, std::uint64_t seed) {
  if (which == "lemma2") return verify_lemma2(seed);
  if (which == "lemma3") return verify_lemma3();
  if (which == "theorem-optimality") return verify_theorem_optimality(seed);
  if (which == "vandermonde") return verify_vandermonde(seed);
  if (which == "cauchy") return verify_cauchy(seed);
  if (which == "ecc") return verify_ecc(seed);
  if (which == "remark1") return verify_remark1(seed);
  throw InvalidParams("unknown verification '" + std::string(which) + "'");
}

std::ostream& operator<<(std::ostream& os, const VerifyReport& report) {
  os << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks
     << " checks, " << report.counterexamples.size() << " counterexamples)";
  for (const auto& c : report.counterexamples) os << "\n  " << c;
  return os;
}

}  // namespace bgc
