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

#include "qbh/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qbh/error.hpp"

namespace qbh {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 31;
constexpr Elem kTableLimit = Elem{1} << 16;
constexpr Elem kAddTableLimit = 256;

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(d + 1, 0);
      std::uint64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(unsigned p, unsigned t) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < t; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f(t + 1, 0);
    std::uint64_t v = low;
    for (unsigned i = 0; i < t; ++i) {
      f[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    f[t] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned t,
                                         std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (t == 0) fail(ErrorKind::InvalidArgument, "field degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < t; ++i) {
    size *= p;
    if (size > kMaxFieldSize) {
      fail(ErrorKind::FieldTooLarge, "p^t exceeds 2^31");
    }
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != t + 1 || mod.back() != 1) {
      fail(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(t));
    }
    for (unsigned c : mod) {
      if (c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(mod, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    mod = default_modulus(p, t);
  }

  static std::mutex registry_mutex;
  static std::map<std::tuple<unsigned, unsigned, Poly>, std::shared_ptr<const Field>> registry;
  std::lock_guard lock(registry_mutex);
  auto key = std::make_tuple(p, t, mod);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto field = std::make_shared<const Field>(p, t, mod);
  registry.emplace(std::move(key), field);
  return field;
}

Field::Field(unsigned p, unsigned t, std::vector<unsigned> modulus)
    : p_(p), t_(t), size_(1), modulus_(std::move(modulus)) {
  pow_p_.resize(t_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= t_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  size_ = pow_p_[t_];

  if (size_ <= kTableLimit && size_ > 2) {
    // Find a primitive element by order search.
    for (Elem g = 2; g < size_; ++g) {
      Elem x = g;
      Elem order = 1;
      while (x != 1) {
        x = mul_poly(x, g);
        ++order;
      }
      if (order == size_ - 1) {
        exp_.resize(2 * (size_ - 1));
        log_.assign(size_, 0);
        Elem y = 1;
        for (Elem i = 0; i < size_ - 1; ++i) {
          exp_[i] = y;
          exp_[i + size_ - 1] = y;
          log_[y] = i;
          y = mul_poly(y, g);
        }
        break;
      }
    }
  }
  if (size_ <= kAddTableLimit && p_ != 2) {
    add_table_.resize(std::size_t{size_} * size_);
    for (Elem a = 0; a < size_; ++a) {
      for (Elem b = 0; b < size_; ++b) {
        Elem r = 0;
        for (unsigned i = 0; i < t_; ++i) {
          r += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
        }
        add_table_[std::size_t{a} * size_ + b] = r;
      }
    }
  }
  basis_trace_.resize(t_);
  for (unsigned i = 0; i < t_; ++i) {
    Elem x = pow_p_[i];  // x^i
    Elem acc = 0;
    Elem y = x;
    for (unsigned j = 0; j < t_; ++j) {
      acc = add(acc, y);
      y = pow(y, p_);
    }
    // The trace lies in F_p, i.e. is a constant polynomial.
    basis_trace_[i] = acc;
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[std::size_t{a} * size_ + b];
  Elem r = 0;
  for (unsigned i = 0; i < t_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0;
  for (unsigned i = 0; i < t_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scale(Elem a, unsigned c) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return a;
  Elem r = 0;
  for (unsigned i = 0; i < t_; ++i) {
    r += ((a % p_) * c % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

Elem Field::mul_poly(Elem a, Elem b) const {
  if (t_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  Poly prod(2 * t_ - 1, 0);
  for (unsigned i = 0; i < t_; ++i) {
    const unsigned ai = digit(a, i);
    if (ai == 0) continue;
    for (unsigned j = 0; j < t_; ++j) {
      prod[i + j] = (prod[i + j] + ai * digit(b, j)) % p_;
    }
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  Elem out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p_[i];
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
  if (!log_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

unsigned Field::trace(Elem a) const {
  unsigned acc = 0;
  for (unsigned i = 0; i < t_; ++i) {
    acc += digit(a, i) * basis_trace_[i];
  }
  return acc % p_;
}

std::vector<unsigned> Field::digits(Elem a) const {
  std::vector<unsigned> out(t_);
  for (unsigned i = 0; i < t_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::from_digits(std::span<const unsigned> d) const {
  if (d.size() != t_) fail(ErrorKind::LengthMismatch, "digit count differs from field degree");
  Elem r = 0;
  for (unsigned i = 0; i < t_; ++i) r += (d[i] % p_) * pow_p_[i];
  return r;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->size()) fail(ErrorKind::InvalidArgument, "element out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() != b.field_ptr()) {
    fail(ErrorKind::InvalidArgument, "elements of different fields");
  }
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.value_)}; }

FieldElement trace_to_prime(const FieldElement& x) {
  return {Field::prime(x.field().characteristic()), x.field().trace(x.value())};
}

const Embedding& Embedding::make(const FieldPtr& source, const FieldPtr& target) {
  static std::mutex cache_mutex;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(source.get(), target.get());
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto emb = std::make_unique<Embedding>(source, target);
  return *cache.emplace(key, std::move(emb)).first->second;
}

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  const Field& s = *source_;
  const Field& t = *target_;
  if (s.characteristic() != t.characteristic() || t.degree() % s.degree() != 0) {
    fail(ErrorKind::NoEmbedding, "target degree is not a multiple of source degree");
  }
  // Smallest root of the source modulus in the target. F_p coefficients
  // are constants and embed as themselves.
  const auto& mod = s.modulus();
  std::optional<Elem> root;
  for (Elem y = 0; y < t.size() && !root; ++y) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = t.add(t.mul(acc, y), mod[i]);
    }
    if (acc == 0) root = y;
  }
  if (!root) fail(ErrorKind::NoEmbedding, "source modulus has no root in target");
  image_of_generator_ = *root;

  std::vector<Elem> powers(s.degree());
  Elem pw = 1;
  for (unsigned i = 0; i < s.degree(); ++i) {
    powers[i] = pw;
    pw = t.mul(pw, *root);
  }
  table_.resize(s.size());
  inverse_.reserve(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    Elem acc = 0;
    for (unsigned i = 0; i < s.degree(); ++i) {
      acc = t.add(acc, t.scale(powers[i], s.digit(x, i)));
    }
    table_[x] = acc;
    inverse_.emplace_back(acc, x);
  }
  std::sort(inverse_.begin(), inverse_.end());
}

std::optional<Elem> Embedding::preimage(Elem y) const {
  auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::make_pair(y, Elem{0}));
  if (it == inverse_.end() || it->first != y) return std::nullopt;
  return it->second;
}

FieldElement embed(const FieldElement& x, const FieldPtr& target) {
  const Embedding& e = Embedding::make(x.field_ptr(), target);
  return {target, e(x.value())};
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "vector lengths differ");
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

bool is_zero(std::span<const Elem> a) {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

}  // namespace qbh
