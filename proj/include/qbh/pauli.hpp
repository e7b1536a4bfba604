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
#include <span>
#include <string>
#include <vector>

#include "qbh/gf.hpp"

namespace qbh {

/// 4 for p = 2 (phases are powers of i), p otherwise.
unsigned phase_modulus(unsigned p);

/// omega^c X(a) Z(b) on N qudits of dimension q, where
/// X(a)|x> = |x + a> and Z(b)|x> = omega_p^{tr(b.x)} |x>.
/// For p = 2, omega = i and c is taken mod 4.
class PauliElement {
 public:
  PauliElement(FieldPtr field, unsigned phase, Vec x, Vec z);

  static PauliElement identity(FieldPtr field, std::size_t n);
  static PauliElement x_op(FieldPtr field, Vec a);
  static PauliElement z_op(FieldPtr field, Vec b);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return x_.size(); }
  unsigned phase() const { return phase_; }
  const Vec& x() const { return x_; }
  const Vec& z() const { return z_; }

  friend bool operator==(const PauliElement& a, const PauliElement& b) {
    return a.field_ == b.field_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

 private:
  FieldPtr field_;
  unsigned phase_;
  Vec x_;
  Vec z_;
};

struct SymplecticVector {
  Vec a;
  Vec b;

  std::size_t length() const { return a.size(); }
  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

SymplecticVector psi(const PauliElement& e);
PauliElement mul(const PauliElement& e, const PauliElement& f);
/// Integer power; exponent taken mod the element order.
PauliElement pow(const PauliElement& e, unsigned exponent);

/// tr(b.a' - b'.a) in F_p.
unsigned symp_ip(const Field& f, const SymplecticVector& u, const SymplecticVector& v);
std::size_t swt(const SymplecticVector& v);
bool commutes(const PauliElement& e, const PauliElement& f);

/// F_p digits of (a | b): a_0 digits 0..r-1, a_1 ..., then b likewise.
Vec flatten(const Field& f, const SymplecticVector& v);
SymplecticVector unflatten(const Field& f, std::size_t n, std::span<const Elem> digits);

/// "c|a_1 ... a_N|b_1 ... b_N" with packed field elements.
std::string format_pauli(const PauliElement& e);
PauliElement parse_pauli(const FieldPtr& field, const std::string& text);
/// "X1 Z3 X2^2" style, 1-based positions; "I" for the identity. Powers are
/// packed field elements, so this is only readable for q = p.
std::string render(const PauliElement& e);

}  // namespace qbh
