// Copyright 2026 The qbh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qbh {

/// Packed field element: the base-p digits of the value are the polynomial
/// coefficients of the element, constant term first.
using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

bool is_prime(std::uint64_t n);

/// The finite field F_{p^t} = F_p[x] / (modulus).
///
/// Fields are interned: `make` returns the same instance for the same
/// (p, t, modulus), so pointer equality is field equality. All members are
/// immutable after construction.
class Field {
 public:
  /// Without an explicit modulus the monic irreducible polynomial of degree t
  /// with the smallest packed lower-coefficient value is used.
  static std::shared_ptr<const Field> make(
      unsigned p, unsigned t,
      std::optional<std::vector<unsigned>> modulus = std::nullopt);

  static std::shared_ptr<const Field> prime(unsigned p) { return make(p, 1); }

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return t_; }
  Elem size() const { return size_; }
  /// Coefficients constant term first; length degree() + 1, last entry 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// c * a for c in F_p.
  Elem scale(Elem a, unsigned c) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// Absolute trace a + a^p + ... + a^{p^{t-1}}, as an integer in [0, p).
  unsigned trace(Elem a) const;

  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(std::span<const unsigned> digits) const;
  /// Coefficient of x^i in a.
  unsigned digit(Elem a, unsigned i) const { return (a / pow_p_[i]) % p_; }
  /// The class of x (the polynomial-basis generator); 1 when t = 1.
  Elem generator() const { return t_ == 1 ? 1 : p_; }

  /// Schoolbook polynomial multiplication modulo the modulus. Independent of
  /// the log tables; exposed for cross-checking.
  Elem mul_poly(Elem a, Elem b) const;

  Field(unsigned p, unsigned t, std::vector<unsigned> modulus);

 private:
  unsigned p_;
  unsigned t_;
  Elem size_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> pow_p_;
  std::vector<unsigned> basis_trace_;
  std::vector<Elem> exp_;
  std::vector<Elem> log_;
  std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// An element bundled with its owning field, for call sites where carrying
/// the field alongside the value is clearer than passing both.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Elem value() const { return value_; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

/// Trace down to the prime field, returned as an element of F_p.
FieldElement trace_to_prime(const FieldElement& x);

/// Ring embedding F_{p^s} -> F_{p^t} (s | t) sending the source generator to
/// the smallest root of the source modulus in the target.
class Embedding {
 public:
  static const Embedding& make(const FieldPtr& source, const FieldPtr& target);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem root() const { return table_.size() > 1 ? image_of_generator_ : 0; }
  Elem operator()(Elem x) const { return table_[x]; }
  /// The source element mapping to y, if y lies in the image.
  std::optional<Elem> preimage(Elem y) const;

  Embedding(FieldPtr source, FieldPtr target);

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem image_of_generator_ = 0;
  std::vector<Elem> table_;
  std::vector<std::pair<Elem, Elem>> inverse_;
};

FieldElement embed(const FieldElement& x, const FieldPtr& target);

// Vector helpers over a field.
Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
bool is_zero(std::span<const Elem> a);

}  // namespace qbh
