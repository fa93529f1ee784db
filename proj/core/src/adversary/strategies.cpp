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

#include "bgc/adversary/strategies.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "bgc/adversary/symmetrization.hpp"
#include "bgc/coding/decoding.hpp"
#include "bgc/errors.hpp"
#include "bgc/protocol/grouping.hpp"

namespace bgc {

AdversaryStrategy::AdversaryStrategy(std::vector<std::size_t> controlled)
    : controlled_(std::move(controlled)) {
  std::sort(controlled_.begin(), controlled_.end());
  controlled_.erase(std::unique(controlled_.begin(), controlled_.end()), controlled_.end());
}

bool LiePlan::lies_at(std::size_t level) const {
  return all_levels || std::find(levels.begin(), levels.end(), level) != levels.end();
}

namespace {

FieldElement random_nonzero(std::mt19937_64& rng, std::uint64_t q) {
  std::uniform_int_distribution<std::uint64_t> dist(1, q - 1);
  return FieldElement(dist(rng), q);
}

Vector add_noise(const Vector& honest, std::mt19937_64& rng) {
  Vector out = honest;
  for (auto& x : out) x += random_nonzero(rng, x.modulus());
  return out;
}

class Honest final : public AdversaryStrategy {
 public:
  Honest() : AdversaryStrategy({}) {}
  std::string name() const override { return "honest"; }
  Vector respond(const Query&, std::size_t, const Vector& honest) override { return honest; }
};

class RandomCorruption final : public AdversaryStrategy {
 public:
  RandomCorruption(std::vector<std::size_t> controlled, std::uint64_t seed, Persistence persistence)
      : AdversaryStrategy(std::move(controlled)), rng_(seed), persistence_(persistence) {}

  std::string name() const override {
    switch (persistence_) {
      case Persistence::kAlways: return "random-always";
      case Persistence::kInitialOnly: return "random-initial-only";
      case Persistence::kPerQueryCoin: return "random-coin";
    }
    return "random";
  }

  Vector respond(const Query& query, std::size_t, const Vector& honest) override {
    bool corrupt = false;
    switch (persistence_) {
      case Persistence::kAlways: corrupt = true; break;
      case Persistence::kInitialOnly: corrupt = query.kind == QueryKind::kInitial; break;
      case Persistence::kPerQueryCoin: corrupt = (rng_() & 1U) != 0; break;
    }
    return corrupt ? add_noise(honest, rng_) : honest;
  }

 private:
  std::mt19937_64 rng_;
  Persistence persistence_;
};

class TournamentLiar final : public AdversaryStrategy {
 public:
  TournamentLiar(std::vector<std::size_t> controlled, LiePlan plan)
      : AdversaryStrategy(std::move(controlled)), plan_(std::move(plan)), rng_(plan_.seed) {}

  std::string name() const override { return "tournament-liar"; }

  void attach(const SchemeView& scheme) override {
    const std::size_t p = scheme.assignment.samples();
    const std::uint64_t q = scheme.code.modulus();
    if (plan_.target && *plan_.target >= p) {
      throw InvalidParams("lie plan targets sample " + std::to_string(*plan_.target + 1) +
                          " but p = " + std::to_string(p));
    }
    delta_ = FieldElement::from_signed(plan_.delta, q);
    targets_.assign(scheme.code.n(), 0);
    weights_.assign(scheme.code.n(), FieldElement::zero(q));
    for (auto j : controlled()) {
      const auto held = scheme.assignment.samples_of(j);
      const std::size_t t = plan_.target.value_or(held.empty() ? 0 : held.front());
      targets_[j] = t;
      weights_[j] = scheme.encoding.coefficients(t, j);
    }
  }

  Vector respond(const Query& query, std::size_t worker, const Vector& honest) override {
    if (weights_.empty()) throw InfeasibleState("tournament liar used before attach");
    const FieldElement shift = weights_[worker] * delta_;
    if (query.kind == QueryKind::kInitial) {
      Vector out = honest;
      for (auto& x : out) x += shift;
      return out;
    }
    if (!plan_.lies_at(query.level)) return honest;
    if (plan_.mode == LieMode::kInconsistent) return add_noise(honest, rng_);
    Vector out = honest;
    if (query.range.contains(targets_[worker])) {
      for (auto& x : out) x += shift;
    }
    return out;
  }

 private:
  LiePlan plan_;
  std::mt19937_64 rng_;
  FieldElement delta_;
  std::vector<std::size_t> targets_;
  std::vector<FieldElement> weights_;
};

std::vector<std::size_t> first_satellites(const CodeContext& code) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < code.s() && code.r() + k < code.n(); ++k) out.push_back(code.r() + k);
  return out;
}

class Symmetrization final : public AdversaryStrategy {
 public:
  Symmetrization(const CodeContext& code, std::int64_t lambda)
      : AdversaryStrategy(first_satellites(code)), lambda_(lambda) {}

  std::string name() const override { return "symmetrization"; }

  void attach(const SchemeView& scheme) override {
    const CodeContext& code = scheme.code;
    std::vector<std::size_t> active(code.n());
    for (std::size_t j = 0; j < active.size(); ++j) active[j] = j;
    const GroupingPlan plan = form_groups(active, code.r(), code.s());
    std::vector<Group> groups = plan.groups();
    groups.resize(std::min(groups.size(), code.s()));
    const DecodingMatrix b = build_decoding_matrix(code, groups);
    errors_ = symmetrization_attack(code, b, controlled(), scheme.dimension,
                                    FieldElement::from_signed(lambda_, code.modulus()));
  }

  Vector respond(const Query& query, std::size_t worker, const Vector& honest) override {
    if (query.kind != QueryKind::kInitial || !errors_) return honest;
    return honest + errors_->column_vector(worker);
  }

 private:
  std::int64_t lambda_;
  std::optional<Matrix> errors_;
};

}  // namespace

std::unique_ptr<AdversaryStrategy> make_honest() { return std::make_unique<Honest>(); }

std::unique_ptr<AdversaryStrategy> make_random_corruption(std::vector<std::size_t> controlled,
                                                          std::uint64_t seed,
                                                          Persistence persistence) {
  return std::make_unique<RandomCorruption>(std::move(controlled), seed, persistence);
}

std::unique_ptr<AdversaryStrategy> make_tournament_liar(std::vector<std::size_t> controlled,
                                                        LiePlan plan) {
  return std::make_unique<TournamentLiar>(std::move(controlled), std::move(plan));
}

std::unique_ptr<AdversaryStrategy> make_symmetrization_strategy(const CodeContext& code,
                                                                std::int64_t lambda) {
  return std::make_unique<Symmetrization>(code, lambda);
}

}  // namespace bgc
