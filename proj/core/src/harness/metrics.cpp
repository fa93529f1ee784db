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

#include "bgc/harness/metrics.hpp"

#include <algorithm>
#include <sstream>

namespace bgc {

std::string csv_header() {
  return "n,s,u,p,d,q,assignment,adversary,seed,correct,c,C_oh,rounds,downlink_bits,eliminated";
}

std::string csv_row(const RunMetrics& m) {
  std::ostringstream os;
  os << m.n << ',' << m.s << ',' << m.u << ',' << m.p << ',' << m.d << ',' << m.q << ','
     << m.assignment << ',' << m.adversary << ',' << m.seed << ','
     << (m.correct ? "true" : "false") << ',' << m.c << ',' << m.c_oh << ',' << m.rounds << ','
     << m.downlink_bits << ',';
  for (std::size_t k = 0; k < m.eliminated.size(); ++k) {
    if (k > 0) os << ';';
    os << m.eliminated[k];
  }
  return os.str();
}

void write_csv(std::ostream& os, std::span<const RunMetrics> runs) {
  os << csv_header() << '\n';
  for (const auto& m : runs) os << csv_row(m) << '\n';
}

MetricsSummary summarize(std::span<const RunMetrics> runs) {
  MetricsSummary s;
  s.runs = runs.size();
  for (const auto& m : runs) {
    if (!m.correct) ++s.incorrect;
    if (!m.within_bounds) ++s.bound_violations;
    s.max_c = std::max(s.max_c, m.c);
    s.max_c_oh = std::max(s.max_c_oh, m.c_oh);
    s.max_rounds = std::max(s.max_rounds, m.rounds);
    s.max_downlink_bits = std::max(s.max_downlink_bits, m.downlink_bits);
    s.mean_c += static_cast<double>(m.c);
    s.mean_c_oh += static_cast<double>(m.c_oh);
    s.mean_rounds += static_cast<double>(m.rounds);
    s.mean_downlink_bits += static_cast<double>(m.downlink_bits);
  }
  if (s.runs > 0) {
    const auto k = static_cast<double>(s.runs);
    s.mean_c /= k;
    s.mean_c_oh /= k;
    s.mean_rounds /= k;
    s.mean_downlink_bits /= k;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const MetricsSummary& s) {
  os << "runs=" << s.runs << " incorrect=" << s.incorrect
     << " bound_violations=" << s.bound_violations << " c(max/mean)=" << s.max_c << '/'
     << s.mean_c << " C_oh(max/mean)=" << s.max_c_oh << '/' << s.mean_c_oh
     << " rounds(max/mean)=" << s.max_rounds << '/' << s.mean_rounds
     << " downlink_bits(max/mean)=" << s.max_downlink_bits << '/' << s.mean_downlink_bits;
  return os;
}

}  // namespace bgc
