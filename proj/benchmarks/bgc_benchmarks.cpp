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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bgc/adversary/strategies.hpp"
#include "bgc/algebra/matrix.hpp"
#include "bgc/assignment/assignment.hpp"
#include "bgc/coding/code_context.hpp"
#include "bgc/coding/ecc.hpp"
#include "bgc/coding/encoding.hpp"
#include "bgc/protocol/protocol.hpp"

namespace {

bgc::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, bgc::kDefaultModulus - 1);
  bgc::Matrix m(rows, cols, bgc::kDefaultModulus);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = bgc::FieldElement(dist(rng), bgc::kDefaultModulus);
  }
  return m;
}

void BM_SolveLinear(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const bgc::Matrix a = random_matrix(size, size, 1);
  const bgc::Matrix b = random_matrix(size, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bgc::solve_linear(a, b));
}
BENCHMARK(BM_SolveLinear)->Arg(8)->Arg(32)->Arg(64);

void BM_BuildEncoding(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t s = 2, u = 1, p = 4 * n;
  const auto code = bgc::CodeContext::build(n, s, u);
  const auto a = bgc::make_cyclic(n, p, s + u);
  const bgc::Vector ones(p, bgc::FieldElement::one(code.modulus()));
  for (auto _ : state) benchmark::DoNotOptimize(bgc::build_encoding_matrix(code, a, ones));
}
BENCHMARK(BM_BuildEncoding)->Arg(8)->Arg(16)->Arg(32);

void BM_EccDecode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t s = 2, u = 2, d = 4;
  const auto code = bgc::CodeContext::build(n, s, u);
  const auto a = bgc::make_cyclic(n, n, s + u);
  const bgc::Vector ones(n, bgc::FieldElement::one(code.modulus()));
  const auto w = bgc::build_encoding_matrix(code, a, ones);
  bgc::Matrix z = bgc::response_matrix(random_matrix(d, n, 3), w);
  z(0, 1) += bgc::FieldElement::one(code.modulus());
  const bgc::ResponseMatrix responses{ones, z, std::vector<bool>(n, true)};
  const std::vector<std::size_t> identified{0};
  for (auto _ : state) benchmark::DoNotOptimize(bgc::ecc_decode(code, responses, identified));
}
BENCHMARK(BM_EccDecode)->Arg(7)->Arg(12);

void BM_RunProtocol(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 8, s = 3, u = 1;
  const auto code = bgc::CodeContext::build(n, s, u);
  const auto a = bgc::make_cyclic(n, p, s + u);
  const bgc::Matrix g = random_matrix(3, p, 4);
  for (auto _ : state) {
    bgc::GradientOracle oracle(g);
    auto adversary = bgc::make_random_corruption({1, 4, 6}, 5, bgc::Persistence::kAlways);
    benchmark::DoNotOptimize(bgc::run_protocol(code, a, oracle, *adversary));
  }
}
BENCHMARK(BM_RunProtocol)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
