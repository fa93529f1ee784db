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

#include "bgc/algebra/field.hpp"

#include <ostream>
#include <string>

#include "bgc/errors.hpp"

namespace bgc {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t f = 3; f * f <= q; f += 2) {
    if (q % f == 0) return false;
  }
  return true;
}

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus)
    : value_(0), modulus_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw InvalidParams("field modulus out of range: " + std::to_string(modulus));
  }
  value_ = value % modulus;
}

FieldElement FieldElement::from_signed(std::int64_t value, std::uint64_t modulus) {
  if (value >= 0) return {static_cast<std::uint64_t>(value), modulus};
  // -(value) may overflow for INT64_MIN; reduce the magnitude first.
  std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
  return -FieldElement(mag, modulus);
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw ModulusMismatch("field elements from different fields: q=" + std::to_string(modulus_) +
                          " vs q=" + std::to_string(rhs.modulus_));
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.value_ = value_ == 0 ? 0 : modulus_ - value_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ = (value_ * rhs.value_) % modulus_;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  return *this *= ff_inv(rhs);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement base = *this;
  FieldElement result = one(modulus_);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

FieldElement ff_inv(const FieldElement& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in F_" + std::to_string(x.modulus()));
  // Extended Euclid on (x, q); q need not be prime for the algorithm but the
  // inverse exists for every nonzero x only when it is.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(x.modulus());
  std::int64_t new_r = static_cast<std::int64_t>(x.value());
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero("element not invertible: modulus is not prime");
  return FieldElement::from_signed(t, x.modulus());
}

Vector zero_vector(std::size_t length, std::uint64_t modulus) {
  return Vector(length, FieldElement::zero(modulus));
}

Vector make_vector(std::initializer_list<std::int64_t> values, std::uint64_t modulus) {
  Vector v;
  v.reserve(values.size());
  for (auto x : values) v.push_back(FieldElement::from_signed(x, modulus));
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in +");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in -");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const FieldElement& scalar, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= scalar;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace bgc
