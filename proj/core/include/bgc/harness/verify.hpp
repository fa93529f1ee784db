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

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bgc {

struct VerifyReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty() && checks > 0; }
};

// Zero pattern and group span of W^(a) over every (r+1)-subset, n <= 6.
VerifyReport verify_lemma2(std::uint64_t seed);
// Every s_t-subset fails to symmetrize the s_t+1 lowest-index groups.
VerifyReport verify_lemma3();
// Dropping one group lets the satellites symmetrize the rest.
VerifyReport verify_theorem_optimality(std::uint64_t seed);
VerifyReport verify_vandermonde(std::uint64_t seed);
VerifyReport verify_cauchy(std::uint64_t seed);
// Exhaustive single-error decoding at n=7, s=2, u=2, q=11.
VerifyReport verify_ecc(std::uint64_t seed);
// restrict_encoding against build_encoding_matrix on random masks.
VerifyReport verify_remark1(std::uint64_t seed);

std::vector<std::string> verification_names();
// Throws InvalidParams for an unknown name.
VerifyReport run_verification(std::string_view which, std::uint64_t seed);

std::ostream& operator<<(std::ostream& os, const VerifyReport& report);

}  // namespace bgc
