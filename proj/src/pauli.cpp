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

#include "qbh/pauli.hpp"

#include <sstream>

#include "qbh/error.hpp"

namespace qbh {

namespace {

void check_pair(const PauliElement& e, const PauliElement& f) {
  if (e.field_ptr() != f.field_ptr()) fail(ErrorKind::DimensionMismatch, "Pauli elements over different fields");
  if (e.length() != f.length()) fail(ErrorKind::LengthMismatch, "Pauli elements of different length");
}

Vec parse_elems(const std::string& part) {
  std::istringstream in(part);
  Vec out;
  long long v;
  while (in >> v) {
    if (v < 0) fail(ErrorKind::Parse, "negative field element");
    out.push_back(static_cast<Elem>(v));
  }
  if (!in.eof()) fail(ErrorKind::Parse, "bad field element in '" + part + "'");
  return out;
}

}  // namespace

unsigned phase_modulus(unsigned p) { return p == 2 ? 4 : p; }

PauliElement::PauliElement(FieldPtr field, unsigned phase, Vec x, Vec z)
    : field_(std::move(field)), phase_(phase % phase_modulus(field_->characteristic())),
      x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) fail(ErrorKind::LengthMismatch, "x and z parts differ in length");
  for (Elem v : x_) {
    if (v >= field_->size()) fail(ErrorKind::InvalidArgument, "x entry outside the field");
  }
  for (Elem v : z_) {
    if (v >= field_->size()) fail(ErrorKind::InvalidArgument, "z entry outside the field");
  }
}

PauliElement PauliElement::identity(FieldPtr field, std::size_t n) {
  return PauliElement(std::move(field), 0, Vec(n, 0), Vec(n, 0));
}

PauliElement PauliElement::x_op(FieldPtr field, Vec a) {
  const std::size_t n = a.size();
  return PauliElement(std::move(field), 0, std::move(a), Vec(n, 0));
}

PauliElement PauliElement::z_op(FieldPtr field, Vec b) {
  const std::size_t n = b.size();
  return PauliElement(std::move(field), 0, Vec(n, 0), std::move(b));
}

SymplecticVector psi(const PauliElement& e) { return {e.x(), e.z()}; }

PauliElement mul(const PauliElement& e, const PauliElement& f) {
  check_pair(e, f);
  const Field& fld = e.field();
  const unsigned p = fld.characteristic();
  const unsigned modulus = phase_modulus(p);
  // Z(b) X(a') = omega^{tr(b.a')} X(a') Z(b)
  const unsigned twist = fld.trace(dot(fld, e.z(), f.x())) * (modulus / p);
  return PauliElement(e.field_ptr(), (e.phase() + f.phase() + twist) % modulus,
                      vec_add(fld, e.x(), f.x()), vec_add(fld, e.z(), f.z()));
}

PauliElement pow(const PauliElement& e, unsigned exponent) {
  PauliElement acc = PauliElement::identity(e.field_ptr(), e.length());
  for (unsigned i = 0; i < exponent; ++i) acc = mul(acc, e);
  return acc;
}

unsigned symp_ip(const Field& f, const SymplecticVector& u, const SymplecticVector& v) {
  if (u.a.size() != v.a.size() || u.b.size() != v.b.size() || u.a.size() != u.b.size()) {
    fail(ErrorKind::LengthMismatch, "symplectic vectors of different length");
  }
  return f.trace(f.sub(dot(f, u.b, v.a), dot(f, v.b, u.a)));
}

std::size_t swt(const SymplecticVector& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.a.size(); ++i) w += (v.a[i] != 0 || v.b[i] != 0) ? 1 : 0;
  return w;
}

bool commutes(const PauliElement& e, const PauliElement& f) {
  check_pair(e, f);
  return symp_ip(e.field(), psi(e), psi(f)) == 0;
}

Vec flatten(const Field& f, const SymplecticVector& v) {
  const unsigned r = f.degree();
  Vec out;
  out.reserve(2 * v.a.size() * r);
  for (const Vec* part : {&v.a, &v.b}) {
    for (Elem e : *part) {
      for (unsigned i = 0; i < r; ++i) out.push_back(f.digit(e, i));
    }
  }
  return out;
}

SymplecticVector unflatten(const Field& f, std::size_t n, std::span<const Elem> digits) {
  const unsigned r = f.degree();
  if (digits.size() != 2 * n * r) fail(ErrorKind::LengthMismatch, "flattened vector has wrong length");
  SymplecticVector v{Vec(n), Vec(n)};
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const Elem e = f.from_digits(digits.subspan(i * r, r));
    (i < n ? v.a[i] : v.b[i - n]) = e;
  }
  return v;
}

std::string format_pauli(const PauliElement& e) {
  std::ostringstream out;
  out << e.phase() << '|';
  for (std::size_t i = 0; i < e.length(); ++i) out << (i ? " " : "") << e.x()[i];
  out << '|';
  for (std::size_t i = 0; i < e.length(); ++i) out << (i ? " " : "") << e.z()[i];
  return out.str();
}

PauliElement parse_pauli(const FieldPtr& field, const std::string& text) {
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string::npos) fail(ErrorKind::Parse, "expected c|a...|b...");
  const Vec c = parse_elems(text.substr(0, bar1));
  if (c.size() != 1) fail(ErrorKind::Parse, "expected one phase exponent");
  Vec a = parse_elems(text.substr(bar1 + 1, bar2 - bar1 - 1));
  Vec b = parse_elems(text.substr(bar2 + 1));
  return PauliElement(field, c[0], std::move(a), std::move(b));
}

std::string render(const PauliElement& e) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](char kind, std::size_t pos, Elem power) {
    if (power == 0) return;
    out << (first ? "" : " ") << kind << pos + 1;
    if (power != 1) out << '^' << power;
    first = false;
  };
  if (e.phase() != 0) {
    out << "w^" << e.phase();
    first = false;
  }
  for (std::size_t i = 0; i < e.length(); ++i) {
    emit('X', i, e.x()[i]);
    emit('Z', i, e.z()[i]);
  }
  if (first) out << 'I';
  return out.str();
}

}  // namespace qbh
