// Copyright 2026 The Authors.
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

/// @file field.hpp
/// Exact arithmetic in GF(p^k).
///
/// Elements are carried around as integer codes. For a prime field the code
/// is the residue itself. For k > 1 an element is a polynomial
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} reduced by the modulus, and its code is
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Codes are canonical, so equality of
/// codes is equality of elements, and code order is the enumeration order
/// (zero first, one second).
///
/// Moduli are written low degree first: x^2 + x + 1 over GF(2) is {1, 1, 1}.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pgd/error.hpp"

namespace pgd {

using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable arithmetic tables for one finite field.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^k). When `modulus` is empty and k > 1 the built-in table is
  /// used for q in {4, 8, 9, 16, 25, 27}; otherwise the lexicographically
  /// smallest monic irreducible of degree k is chosen. A supplied modulus is
  /// checked for irreducibility by trial division.
  static FieldPtr make(std::uint32_t p, std::uint32_t k = 1, std::vector<Code> modulus = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime() const noexcept { return k_ == 1; }
  /// Monic modulus, low degree first; empty for prime fields.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }

  bool same_as(const Field& other) const noexcept {
    return this == &other ||
           (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
  }

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code add(Code a, Code b) const noexcept {
    if (k_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept {
    if (k_ == 1) return static_cast<Code>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Throws DivisionByZero on zero.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  /// Coefficients c_0..c_{k-1} of an element.
  std::vector<Code> coefficients(Code a) const;
  /// Inverse of coefficients(); throws InvalidField on out-of-range digits.
  Code from_coefficients(std::span<const Code> coeffs) const;
  /// Maps an integer n to the element n * 1.
  Code from_integer(long long n) const noexcept;

  std::string name() const;
  std::string to_string(Code a) const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<Code> modulus);
  Code add_digits(Code a, Code b) const noexcept;
  Code poly_mul(Code a, Code b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<Code> modulus_;
  std::vector<Code> add_table_;  // only for small extension fields
  std::vector<Code> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
  std::vector<Code> inv_table_;
};

bool is_prime(std::uint32_t n) noexcept;

/// True iff the monic polynomial (low degree first) has no factor of degree
/// 1..deg/2 over GF(p). Exhaustive trial division.
bool is_irreducible(std::uint32_t p, std::span<const Code> monic);

/// Element of a specific field. Cheap to copy; shares the field tables.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  /// Residue for prime fields, coefficient vector otherwise.
  std::vector<Code> coefficients() const { return field_->coefficients(code_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;

  bool operator==(const FieldElement& o) const noexcept {
    return code_ == o.code_ && field_->same_as(*o.field_);
  }

  std::string to_string() const { return field_->to_string(code_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Code code_;
};

/// All q elements in canonical order: zero, one, then increasing code.
std::vector<FieldElement> enumerate_field(const FieldPtr& field);

}  // namespace pgd
