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

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace bgc {

// Default modulus: the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultModulus = 2147483647ULL;

// Largest accepted modulus. Products of two residues must fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = 4294967295ULL;

// Deterministic primality test by trial division (moduli are < 2^32).
bool is_prime(std::uint64_t q);

// An element of the prime field F_q. The modulus travels with the value so
// that mixing elements of different fields is caught at the operation site.
class FieldElement {
 public:
  FieldElement() = default;

  // Reduces `value` modulo `modulus`. Throws InvalidParams when modulus < 2.
  FieldElement(std::uint64_t value, std::uint64_t modulus);

  // Maps a signed integer to its residue.
  static FieldElement from_signed(std::int64_t value, std::uint64_t modulus);

  static FieldElement zero(std::uint64_t modulus) { return {0, modulus}; }
  static FieldElement one(std::uint64_t modulus) { return {1, modulus}; }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  void check_same_field(const FieldElement& rhs) const;

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// Multiplicative inverse. Throws DivisionByZero for x == 0.
FieldElement ff_inv(const FieldElement& x);

// Column vectors over F_q (gradients, combining vectors, queries).
using Vector = std::vector<FieldElement>;

Vector zero_vector(std::size_t length, std::uint64_t modulus);
Vector make_vector(std::initializer_list<std::int64_t> values, std::uint64_t modulus);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const FieldElement& scalar, const Vector& v);
bool is_zero(const Vector& v);

}  // namespace bgc
