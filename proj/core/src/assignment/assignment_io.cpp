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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bgc/assignment/assignment.hpp"
#include "bgc/errors.hpp"

namespace bgc {

void write_assignment(std::ostream& os, const AssignmentMatrix& a) {
  os << a.workers() << ' ' << a.samples() << ' ' << a.replication() << '\n';
  for (std::size_t j = 0; j < a.workers(); ++j) {
    for (std::size_t i = 0; i < a.samples(); ++i) os << (a(j, i) ? '1' : '0');
    os << '\n';
  }
}

std::string to_text(const AssignmentMatrix& a) {
  std::ostringstream os;
  write_assignment(os, a);
  return os.str();
}

AssignmentMatrix read_assignment(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("assignment: missing header line");
  std::istringstream hs(header);
  long long n = -1, p = -1, rho = -1;
  std::string trailing;
  if (!(hs >> n >> p >> rho) || (hs >> trailing) || n <= 0 || p <= 0 || rho <= 0) {
    throw ParseError("assignment: header must be \"n p rho\" with positive integers, got \"" +
                     header + "\"");
  }
  AssignmentMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(p),
                     static_cast<std::size_t>(rho));
  for (long long j = 0; j < n; ++j) {
    std::string line;
    if (!std::getline(is, line)) {
      throw ParseError("assignment: expected " + std::to_string(n) + " rows, got " +
                       std::to_string(j));
    }
    if (line.size() != static_cast<std::size_t>(p)) {
      throw ParseError("assignment: row " + std::to_string(j + 1) + " has " +
                       std::to_string(line.size()) + " characters, expected " + std::to_string(p));
    }
    for (long long i = 0; i < p; ++i) {
      const char ch = line[static_cast<std::size_t>(i)];
      if (ch != '0' && ch != '1') {
        throw ParseError("assignment: row " + std::to_string(j + 1) + " has invalid character");
      }
      a.assign(static_cast<std::size_t>(j), static_cast<std::size_t>(i), ch == '1');
    }
  }
  return a;
}

AssignmentMatrix parse_assignment(const std::string& text) {
  std::istringstream is(text);
  return read_assignment(is);
}

}  // namespace bgc
