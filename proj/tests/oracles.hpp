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

// Brute-force reference implementations. None of these use the library's
// tables, echelon forms or solvers; they only read field moduli and plain
// data, and work by enumeration.

#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

#include "qbh/bh.hpp"
#include "qbh/gf.hpp"

namespace oracle {

using qbh::Elem;
using qbh::Vec;

/// Schoolbook polynomial arithmetic mod the field's modulus.
struct NaiveField {
  unsigned p;
  unsigned t;
  std::vector<unsigned> mod;  // monic, constant term first
  Elem size;

  explicit NaiveField(const qbh::Field& f)
      : p(f.characteristic()), t(f.degree()), mod(f.modulus()), size(f.size()) {}

  std::vector<unsigned> digits(Elem a) const {
    std::vector<unsigned> d(t);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  Elem pack(const std::vector<unsigned>& d) const {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  }
  Elem add(Elem a, Elem b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < t; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  Elem neg(Elem a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return pack(x);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * t, 0);
    for (unsigned i = 0; i < t; ++i) {
      for (unsigned j = 0; j < t; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (std::size_t deg = prod.size(); deg-- > t;) {
      const unsigned c = prod[deg];
      if (c == 0) continue;
      for (unsigned i = 0; i <= t; ++i) {
        prod[deg - t + i] = (prod[deg - t + i] + (p - c) * mod[i]) % p;
      }
    }
    prod.resize(t);
    return pack(prod);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  /// x + x^p + ... + x^{p^{t-1}}, which lies in F_p.
  unsigned trace(Elem a) const {
    Elem acc = 0, cur = a;
    for (unsigned i = 0; i < t; ++i) {
      acc = add(acc, cur);
      cur = pow(cur, p);
    }
    return acc;
  }
  Elem dot(const Vec& a, const Vec& b) const {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
    return acc;
  }
};

inline Vec index_vector(std::uint64_t index, Elem q, std::size_t n) {
  Vec v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return v;
}

inline std::uint64_t count(Elem q, std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= q;
  return c;
}

/// All F_q-combinations of the rows.
inline std::set<Vec> span(const NaiveField& f, const std::vector<Vec>& rows, std::size_t n) {
  std::set<Vec> out;
  const std::uint64_t total = count(f.size, rows.size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Vec coeff = index_vector(idx, f.size, rows.size());
    Vec v(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(coeff[r], rows[r][i]));
    }
    out.insert(v);
  }
  return out;
}

/// All u with u.c = 0 for every c in words.
inline std::set<Vec> dual(const NaiveField& f, const std::set<Vec>& words, std::size_t n) {
  std::set<Vec> out;
  for (std::uint64_t idx = 0; idx < count(f.size, n); ++idx) {
    const Vec u = index_vector(idx, f.size, n);
    bool ok = true;
    for (const auto& c : words) {
      if (f.dot(u, c) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(u);
  }
  return out;
}

inline std::size_t weight(const Vec& v) {
  std::size_t w = 0;
  for (Elem e : v) w += e != 0;
  return w;
}

inline std::size_t min_weight(const std::set<Vec>& words) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& v : words) {
    if (weight(v) > 0) best = std::min(best, weight(v));
  }
  return best;
}

inline std::size_t coset_leader(const NaiveField& f, const std::set<Vec>& sub, const Vec& v) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : sub) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = f.add(v[i], s[i]);
    best = std::min(best, weight(w));
  }
  return best;
}

/// H H^dagger = N I in floating point.
inline bool complex_bh(const qbh::BhMatrix& h) {
  const std::size_t n = h.order();
  const double angle = 2 * std::numbers::pi / h.modulus();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < n; ++c) {
        const int d = static_cast<int>(h.at(i, c)) - static_cast<int>(h.at(j, c));
        s += std::polar(1.0, angle * d);
      }
      const double want = i == j ? static_cast<double>(n) : 0.0;
      if (std::abs(s - want) > 1e-9) return false;
    }
  }
  return true;
}

/// Symplectic form tr(b.a' - b'.a) by naive arithmetic.
inline unsigned symp(const NaiveField& f, const Vec& a, const Vec& b, const Vec& a2, const Vec& b2) {
  return f.trace(f.sub(f.dot(b, a2), f.dot(b2, a)));
}

/// Minimum swt over the F_p-span of `centralizer` minus the F_p-span of
/// `stabilizer`, both given as (a | b) pairs over F_q, by enumerating sets.
struct SymplecticSpan {
  std::set<std::pair<Vec, Vec>> elements;
};

inline SymplecticSpan fp_span(const NaiveField& f, const std::vector<std::pair<Vec, Vec>>& gens, std::size_t n) {
  SymplecticSpan s;
  s.elements.insert({Vec(n, 0), Vec(n, 0)});
  for (const auto& g : gens) {
    std::set<std::pair<Vec, Vec>> next;
    for (const auto& [a, b] : s.elements) {
      Vec x = a, z = b;
      for (unsigned k = 0; k < f.p; ++k) {
        next.insert({x, z});
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = f.add(x[i], g.first[i]);
          z[i] = f.add(z[i], g.second[i]);
        }
      }
    }
    s.elements = std::move(next);
  }
  return s;
}

}  // namespace oracle
