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

#include "qbh/construct.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "qbh/linalg.hpp"

namespace qbh {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > budget / base) fail(ErrorKind::BudgetExceeded, std::string(what) + " exceeds the enumeration budget");
    v *= base;
  }
  if (v > budget) fail(ErrorKind::BudgetExceeded, std::string(what) + " exceeds the enumeration budget");
  return v;
}

// swt of a flattened vector (a digits, then b digits).
std::size_t flat_swt(const Vec& v, std::size_t n, unsigned r) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool hit = false;
    for (unsigned d = 0; d < r && !hit; ++d) hit = v[i * r + d] != 0 || v[(n + i) * r + d] != 0;
    w += hit ? 1 : 0;
  }
  return w;
}

}  // namespace

StabilizerCode::StabilizerCode(FieldPtr field, std::size_t n, std::size_t k, std::size_t m, std::size_t s,
                               std::vector<PauliElement> generators, std::optional<Provenance> provenance)
    : field_(std::move(field)), n_(n), k_(k), m_(m), s_(s), generators_(std::move(generators)),
      provenance_(std::move(provenance)) {
  for (const auto& g : generators_) {
    if (g.field_ptr() != field_) fail(ErrorKind::DimensionMismatch, "generator over a different field");
    if (g.length() != n_ * m_) fail(ErrorKind::LengthMismatch, "generator length differs from nm");
  }
}

std::vector<Vec> StabilizerCode::symplectic_matrix() const {
  std::vector<Vec> rows;
  rows.reserve(generators_.size());
  for (const auto& g : generators_) rows.push_back(flatten(*field_, psi(g)));
  return rows;
}

StabilizerCode build(const LinearCode& inner, const LinearCode& outer) {
  const std::size_t n = inner.length();
  const std::size_t k = inner.dimension();
  if (k < 1 || k >= n) fail(ErrorKind::DimensionBounds, "need 1 <= k < n for C, got k=" + std::to_string(k) +
                                                            " n=" + std::to_string(n));
  LinearCode d = validate_outer_code(outer);
  FunctionalTable table = FunctionalTable::make(inner, outer.field_ptr());
  const FieldPtr& fq = inner.field_ptr();
  const Field& f = *fq;
  const unsigned r = f.degree();
  const std::size_t m = d.length();
  const std::size_t s = d.dimension();

  std::vector<PauliElement> gens;
  for (auto& x : big_f_kernel(table, d)) gens.push_back(PauliElement::x_op(fq, std::move(x)));
  const LinearCode perp = dual(inner);
  for (std::size_t block = 0; block < m; ++block) {
    for (const auto& h : perp.generator()) {
      for (unsigned i = 0; i < r; ++i) {
        Vec z(n * m, 0);
        const Vec scaled = vec_scale(f, f.pow(f.generator(), i), h);
        std::copy(scaled.begin(), scaled.end(), z.begin() + block * n);
        gens.push_back(PauliElement::z_op(fq, std::move(z)));
      }
    }
  }
  return StabilizerCode(fq, n, k, m, s, std::move(gens), Provenance{inner, std::move(d), std::move(table)});
}

std::size_t ell(const LinearCode& inner, const LinearCode& outer, const FunctionalTable& table,
                std::uint64_t budget) {
  const LinearCode perp = dual(inner);
  std::map<Elem, std::size_t> leader;
  auto leader_of = [&](Elem lambda) {
    auto it = leader.find(lambda);
    if (it != leader.end()) return it->second;
    const std::size_t w = coset_leader_weight(perp, table.theta(lambda), budget);
    leader.emplace(lambda, w);
    return w;
  };
  const std::uint64_t count = outer.size(budget);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    const Codeword lam = outer.codeword(idx);
    std::size_t w = 0;
    for (Elem l : lam) w += l == 0 ? 0 : leader_of(l);
    best = std::min(best, w);
  }
  return best;
}

std::size_t distance(StabilizerCode& code, std::uint64_t budget) {
  if (auto d = code.cached_distance()) return *d;
  const auto& prov = code.provenance();
  if (!prov) fail(ErrorKind::InvalidArgument, "distance needs the codes C and D the stabilizer was built from");
  const std::size_t dc = min_distance(prov->inner, budget);
  const std::size_t delta = std::min(dc, ell(prov->inner, prov->outer, prov->table, budget));
  code.set_distance(delta);
  return delta;
}

std::vector<SymplecticVector> centralizer_basis(const StabilizerCode& code) {
  const auto& prov = code.provenance();
  if (!prov) fail(ErrorKind::InvalidArgument, "centralizer basis needs provenance");
  const Field& f = code.field();
  const Field& K = prov->table.ext();
  const unsigned r = f.degree();
  const std::size_t n = code.n(), m = code.m(), len = n * m;
  std::vector<SymplecticVector> out;
  auto place = [&](Vec& target, std::size_t block, const Vec& v) {
    std::copy(v.begin(), v.end(), target.begin() + block * n);
  };
  for (std::size_t block = 0; block < m; ++block) {
    for (const auto& c : prov->table.fp_basis()) {
      SymplecticVector v{Vec(len, 0), Vec(len, 0)};
      place(v.a, block, c);
      out.push_back(std::move(v));
    }
  }
  const LinearCode perp = dual(prov->inner);
  for (std::size_t block = 0; block < m; ++block) {
    for (const auto& h : perp.generator()) {
      for (unsigned i = 0; i < r; ++i) {
        SymplecticVector v{Vec(len, 0), Vec(len, 0)};
        place(v.b, block, vec_scale(f, f.pow(f.generator(), i), h));
        out.push_back(std::move(v));
      }
    }
  }
  for (const auto& row : prov->outer.generator()) {
    for (unsigned a = 0; a < K.degree(); ++a) {
      const Vec lam = vec_scale(K, K.pow(K.generator(), a), row);
      SymplecticVector v{Vec(len, 0), Vec(len, 0)};
      for (std::size_t block = 0; block < m; ++block) place(v.b, block, prov->table.theta(lam[block]));
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::size_t distance_bruteforce(const StabilizerCode& code, std::uint64_t budget) {
  const Field& f = code.field();
  const unsigned p = f.characteristic();
  const unsigned r = f.degree();
  const std::size_t len = code.length();
  const std::size_t width = 2 * len * r;
  const FieldPtr fp_ptr = Field::prime(p);
  const Field& fp = *fp_ptr;

  // Centralizer as the F_p-nullspace of v -> symp_ip(v, g).
  std::vector<Vec> equations;
  for (const auto& g : code.generators()) {
    const SymplecticVector gv = psi(g);
    Vec eq(width, 0);
    Vec unit(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
      unit[i] = 1;
      eq[i] = symp_ip(f, unflatten(f, len, unit), gv);
      unit[i] = 0;
    }
    equations.push_back(std::move(eq));
  }
  const std::vector<Vec> cent = nullspace(fp, equations, width);

  const Echelon stab = rref(fp, code.symplectic_matrix(), width);
  std::vector<Vec> basis(stab.rows.begin(), stab.rows.end());
  const std::size_t stab_dim = basis.size();
  Echelon grow = stab;
  for (const auto& v : cent) {
    if (!in_span(fp, grow, v)) {
      basis.push_back(v);
      std::vector<Vec> rows = grow.rows;
      rows.push_back(v);
      grow = rref(fp, std::move(rows), width);
    }
  }
  checked_power(p, basis.size(), budget, "centralizer");
  const bool logical = basis.size() > stab_dim;

  // Odometer over coefficient vectors. A vector lies in S exactly when all of
  // its coefficients on the complement are zero.
  const std::size_t dim = basis.size();
  std::vector<unsigned> coeff(dim, 0);
  Vec current(width, 0);
  std::size_t nonzero_complement = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::size_t pos = 0;
    while (pos < dim) {
      current = vec_add(fp, current, basis[pos]);
      const unsigned before = coeff[pos];
      coeff[pos] = (coeff[pos] + 1) % p;
      if (pos >= stab_dim) {
        if (before == 0) ++nonzero_complement;
        if (coeff[pos] == 0) --nonzero_complement;
      }
      if (coeff[pos] != 0) break;
      ++pos;
    }
    if (pos == dim) break;
    if (logical ? nonzero_complement > 0 : true) best = std::min(best, flat_swt(current, len, r));
  }
  return best;
}

Vec syndrome(const StabilizerCode& code, const PauliElement& e) {
  if (e.length() != code.length()) fail(ErrorKind::LengthMismatch, "error length differs from N");
  if (e.field_ptr() != code.field_ptr()) fail(ErrorKind::DimensionMismatch, "error over a different field");
  Vec out;
  out.reserve(code.generators().size());
  const SymplecticVector ev = psi(e);
  for (const auto& g : code.generators()) out.push_back(symp_ip(code.field(), ev, psi(g)));
  return out;
}

bool detectable(const StabilizerCode& code, const PauliElement& e) {
  if (!is_zero(syndrome(code, e))) return true;
  const Field& fp = *Field::prime(code.field().characteristic());
  const std::size_t width = 2 * code.length() * code.field().degree();
  return in_span(fp, rref(fp, code.symplectic_matrix(), width), flatten(code.field(), psi(e)));
}

}  // namespace qbh
