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

#include "pgd/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace pgd {

namespace {

using Poly = std::vector<Code>;  // low degree first, residues mod p

// Conway polynomials for the small extension fields used at desk scale.
const std::map<std::uint32_t, Poly>& builtin_moduli() {
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},         // x^2 + x + 1
      {8, {1, 1, 0, 1}},      // x^3 + x + 1
      {9, {2, 2, 1}},         // x^2 + 2x + 2
      {16, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {25, {2, 4, 1}},        // x^2 + 4x + 2
      {27, {1, 2, 0, 1}},     // x^3 + 2x + 1
  };
  return table;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<Code>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Enumerate monic polynomials of degree d over GF(p) in lexicographic order of
// the lower coefficients (c_0 fastest).
bool next_lower(Poly& coeffs, std::uint32_t p) {
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    if (++coeffs[i] < p) return true;
    coeffs[i] = 0;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const Code> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const Poly m(monic.begin(), monic.end());
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly f(d + 1, 0);
    f[d] = 1;
    do {
      if (poly_rem(m, f, p).empty()) return false;
    } while (next_lower(f, p));
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k, std::vector<Code> modulus) {
  if (!pgd::is_prime(p)) throw Error(Errc::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidField, "degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::InvalidField, "field order exceeds 2^16");
  }
  if (k == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1 && modulus[0] == 0)) {
      throw Error(Errc::InvalidField, "prime fields take no modulus");
    }
    return FieldPtr(new Field(p, 1, {}));
  }
  if (modulus.empty()) {
    auto it = builtin_moduli().find(static_cast<std::uint32_t>(q));
    if (it != builtin_moduli().end() && it->second.size() == k + 1) {
      modulus = it->second;
    } else {
      Poly f(k + 1, 0);
      f[k] = 1;
      do {
        if (is_irreducible(p, f)) {
          modulus = f;
          break;
        }
      } while (next_lower(f, p));
    }
  }
  if (modulus.size() != k + 1) {
    throw Error(Errc::InvalidField, "modulus must have k+1 coefficients");
  }
  for (Code c : modulus) {
    if (c >= p) throw Error(Errc::InvalidField, "modulus coefficient out of range");
  }
  if (modulus.back() != 1) throw Error(Errc::InvalidField, "modulus must be monic");
  if (!is_irreducible(p, modulus)) throw Error(Errc::InvalidField, "modulus is reducible");
  return FieldPtr(new Field(p, k, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<Code> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;

  inv_table_.assign(q_, 0);
  if (k_ == 1) {
    for (Code a = 1; a < q_; ++a) {
      // a^(p-2)
      std::uint64_t r = 1, base = a;
      for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % p_;
        base = base * base % p_;
      }
      inv_table_[a] = static_cast<Code>(r);
    }
    return;
  }

  neg_table_.resize(q_);
  for (Code a = 0; a < q_; ++a) {
    auto c = coefficients(a);
    for (auto& d : c) d = d == 0 ? 0 : p_ - d;
    neg_table_[a] = from_coefficients(c);
  }
  if (q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Code a = 0; a < q_; ++a) {
      for (Code b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
    }
  }

  // Log tables from the first primitive element found.
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (Code g = 2; g < q_; ++g) {
    Code x = 1;
    std::uint32_t ord = 0;
    do {
      x = poly_mul(x, g);
      ++ord;
    } while (x != 1 && ord < q_);
    if (ord != q_ - 1) continue;
    x = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
      exp_[e] = x;
      log_[x] = e;
      x = poly_mul(x, g);
    }
    break;
  }
  for (Code a = 1; a < q_; ++a) inv_table_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Code Field::add_digits(Code a, Code b) const noexcept {
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const Code da = a % p_;
    const Code db = b % p_;
    out += ((da + db) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Code Field::poly_mul(Code a, Code b) const {
  const Poly pa = coefficients(a);
  const Poly pb = coefficients(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<Code>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    }
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + name());
  return inv_table_[a];
}

std::vector<Code> Field::coefficients(Code a) const {
  std::vector<Code> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Code Field::from_coefficients(std::span<const Code> coeffs) const {
  if (coeffs.size() != k_) throw Error(Errc::InvalidField, "expected " + std::to_string(k_) + " coefficients");
  Code out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(Errc::InvalidField, "coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return out;
}

Code Field::from_integer(long long n) const noexcept {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::string Field::name() const {
  return k_ == 1 ? "GF(" + std::to_string(p_) + ")"
                 : "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

std::string Field::to_string(Code a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'a';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw Error(Errc::InvalidField, "null field");
  if (code_ >= field_->order()) throw Error(Errc::InvalidField, "element code out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) {
    throw Error(Errc::MixedFields, field_->name() + " vs " + o.field_->name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

std::vector<FieldElement> enumerate_field(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Code c = 0; c < field->order(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace pgd
