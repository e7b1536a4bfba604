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

// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "oracles.hpp"
#include "qbh/bh.hpp"
#include "qbh/construct.hpp"
#include "qbh/functional.hpp"
#include "qbh/linalg.hpp"
#include "qbh/statevec.hpp"

using namespace qbh;

namespace {

// Collects the first failure of a criterion plus free-form detail lines.
struct Report {
  bool ok = true;
  std::string failure;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void note(std::string line) { details.push_back(std::move(line)); }
};

std::string describe(const inst::Params& p) {
  std::ostringstream s;
  s << "p=" << p.p << " r=" << p.r << " n=" << p.n << " k=" << p.k << " m=" << p.m << " s=" << p.s;
  return s.str();
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

LinearCode rep(const FieldPtr& f, std::size_t n) { return LinearCode::make(f, {Vec(n, 1)}); }

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Echelon symplectic_rows(const StabilizerCode& s) {
  const Field& fp = *Field::prime(s.field().characteristic());
  return rref(fp, s.symplectic_matrix(), 2 * s.length() * s.field().degree());
}

std::size_t fp_rank(const StabilizerCode& s) { return symplectic_rows(s).rank(); }

// Generators as (X part, Z part) strings of 0/1 over nine qubits.
StabilizerCode standard_shor() {
  auto f2 = Field::prime(2);
  const char* rows[][2] = {
      {"000000000", "110000000"}, {"000000000", "011000000"}, {"000000000", "000110000"},
      {"000000000", "000011000"}, {"000000000", "000000110"}, {"000000000", "000000011"},
      {"111111000", "000000000"}, {"000111111", "000000000"},
  };
  std::vector<PauliElement> gens;
  for (const auto& r : rows) {
    Vec a(9), b(9);
    for (int i = 0; i < 9; ++i) {
      a[i] = r[0][i] - '0';
      b[i] = r[1][i] - '0';
    }
    gens.emplace_back(f2, 0, a, b);
  }
  return StabilizerCode(f2, 3, 1, 3, 1, gens);
}

// Q = fix(S): every code state is fixed, the states are orthonormal and
// there are exactly dim fix(S) of them.
void check_code_space(Report& rep_, const StabilizerCode& s, const std::string& tag) {
  const auto& prov = *s.provenance();
  const auto states = code_states(prov.table, prov.outer);
  const std::uint64_t q = s.field().size();
  const std::uint64_t expect = power(q, s.k() * s.s());
  rep_.require(fix_dim(s) == expect, tag + ": fix_dim != q^{ks}");
  rep_.require(states.size() == expect, tag + ": |D| != q^{ks}");
  for (std::size_t i = 0; i < states.size() && rep_.ok; ++i) {
    rep_.require(has_unit_norm(states[i]), tag + ": code state not normalized");
    for (const auto& g : s.generators()) rep_.require(apply(g, states[i]) == states[i], tag + ": code state not fixed");
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      rep_.require(inner(states[i], states[j]).is_zero(), tag + ": code states not orthogonal");
    }
  }
}

struct Seeded {
  inst::Instance in;
  StabilizerCode code;
};

const std::vector<Seeded>& criterion3_instances() {
  static const std::vector<Seeded> all = [] {
    std::vector<Seeded> out;
    std::mt19937_64 rng(20240601);
    for (const auto& prm : inst::small_parameter_sets()) {
      auto in = inst::random_instance(rng, prm);
      auto code = build(in.inner, in.outer);
      out.push_back({std::move(in), std::move(code)});
    }
    return out;
  }();
  return all;
}

Report criterion1() {
  Report r;
  auto f2 = Field::prime(2);
  auto s = build(rep(f2, 3), rep(f2, 3));
  r.require(s.length() == 9 && s.logical() == 1, "parameters are not [[9,1]]");
  r.require(distance(s) == 3, "distance is not 3");
  std::size_t xs = 0, zs = 0;
  for (const auto& g : s.generators()) {
    xs += !is_zero(g.x()) && is_zero(g.z());
    zs += is_zero(g.x()) && !is_zero(g.z());
  }
  r.require(xs == 2 && zs == 6, "generator types are not 2 X + 6 Z");
  const Echelon ours = symplectic_rows(s), theirs = symplectic_rows(standard_shor());
  r.require(ours.rows == theirs.rows, "row space differs from the standard Shor stabilizer");
  r.note("N=9 K=1 delta=" + std::to_string(distance(s)) + ", " + std::to_string(xs) + " X-type, " +
         std::to_string(zs) + " Z-type generators");
  return r;
}

Report criterion2() {
  Report r;
  auto f3 = Field::prime(3);
  auto s = build(rep(f3, 3), rep(f3, 3));
  r.require(s.length() == 9 && s.logical() == 1, "parameters are not [[9,1]]_3");
  r.require(distance(s) == 3, "distance is not 3");
  r.require(s.provenance()->table.matrix() == BhMatrix(3, 3, {0, 0, 0, 0, 1, 2, 0, 2, 1}),
            "BH matrix differs from [[1,1,1],[1,w,w^2],[1,w^2,w]]");
  r.require(fix_dim(s) == 3, "fix_dim is not 3");
  return r;
}

Report criterion3() {
  Report r;
  for (const auto& [in, s] : criterion3_instances()) {
    const auto& prm = in.params;
    const std::string tag = describe(prm);
    r.require(s.generators().size() == prm.r * (prm.n * prm.m - prm.k * prm.s), tag + ": generator count");
    r.require(fp_rank(s) == s.generators().size(), tag + ": generators not independent");
    check_code_space(r, s, tag);
  }
  r.note(std::to_string(criterion3_instances().size()) + " parameter sets");
  return r;
}

Report criterion4() {
  Report r;
  std::size_t checked = 0;
  for (const auto& [in, s0] : criterion3_instances()) {
    auto s = s0;
    const std::size_t cent_dim = 2 * s.length() * s.field().degree() - fp_rank(s);
    if (power(s.field().characteristic(), cent_dim) > (1u << 20)) continue;
    ++checked;
    const std::size_t theorem = distance(s), brute = distance_bruteforce(s);
    r.require(theorem == brute, describe(in.params) + ": theorem " + std::to_string(theorem) + " vs brute " +
                                    std::to_string(brute));
  }
  r.note(std::to_string(checked) + " instances enumerated");
  return r;
}

Report criterion5() {
  Report r;
  for (const auto& [in, s] : criterion3_instances()) {
    const auto& prm = in.params;
    const auto& prov = *s.provenance();
    const auto kernel = big_f_kernel(prov.table, prov.outer);
    r.require(kernel.size() == prm.r * prm.k * (prm.m - prm.s), describe(prm) + ": kernel nullity");
  }
  return r;
}

Report criterion6() {
  Report r;
  std::size_t general = 0;
  for (const auto& [in, s0] : criterion3_instances()) {
    auto s = s0;
    const std::size_t dc = min_distance(in.inner), dd = min_distance(s.provenance()->outer);
    if (dc > dd) continue;
    ++general;
    r.require(distance(s) == dc, describe(in.params) + ": distance != d(C) although d(C) <= d(D)");
  }
  std::mt19937_64 rng(66);
  std::size_t repetition = 0;
  for (unsigned p : {2u, 3u}) {
    for (unsigned rr : {1u, 2u}) {
      auto f = Field::make(p, rr);
      const Field& fp = *Field::prime(p);
      for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
          for (std::size_t m = 2; m <= 3; ++m) {
            if (power(f->size(), n * m) > (1u << 16)) continue;
            ++repetition;
            const auto c = inst::random_code(rng, f, n, k, false);
            auto s = build(c, rep(Field::make(p, rr * static_cast<unsigned>(k)), m));
            const std::string tag = "rep p=" + std::to_string(p) + " r=" + std::to_string(rr) + " n=" +
                                    std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
            r.require(distance(s) == std::min(min_distance(c), m), tag + ": delta != min(d(C), m)");
            const auto& prov = *s.provenance();
            const auto words = c.codewords();
            if (power(words.size(), m) <= (1u << 12)) {
              std::vector<Vec> rows;
              const std::size_t len = n * m;
              for (const auto& v : big_f_kernel(prov.table, prov.outer)) {
                rows.push_back(flatten(*f, {v, Vec(len, 0)}));
              }
              const Echelon ker = rref(fp, rows, 2 * len * f->degree());
              std::vector<std::size_t> idx(m, 0);
              while (true) {
                Vec tuple, sum(n, 0);
                for (std::size_t i = 0; i < m; ++i) {
                  tuple.insert(tuple.end(), words[idx[i]].begin(), words[idx[i]].end());
                  sum = vec_add(*f, sum, words[idx[i]]);
                }
                r.require(in_span(fp, ker, flatten(*f, {tuple, Vec(len, 0)})) == is_zero(sum),
                          tag + ": X-part kernel is not {sum c_i = 0}");
                std::size_t i = 0;
                while (i < m && ++idx[i] == words.size()) idx[i++] = 0;
                if (i == m) break;
              }
            }
            if (power(f->size(), n * m) <= 4096) {
              r.require(span_equal(code_states(prov.table, prov.outer), equal_sum_states(c, m)),
                        tag + ": equal-sum states do not span Q");
            }
          }
        }
      }
    }
  }
  r.note(std::to_string(general) + " instances with d(C) <= d(D), " + std::to_string(repetition) +
         " repetition instances");
  return r;
}

std::vector<std::vector<std::vector<unsigned>>> invertible_grams(unsigned p, unsigned t) {
  std::vector<std::vector<std::vector<unsigned>>> out;
  const auto fp = Field::prime(p);
  const std::uint64_t total = power(p, t * t);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::vector<unsigned>> g(t, std::vector<unsigned>(t));
    std::vector<Vec> rows(t, Vec(t));
    std::uint64_t v = idx;
    for (unsigned i = 0; i < t; ++i) {
      for (unsigned j = 0; j < t; ++j) {
        g[i][j] = static_cast<unsigned>(v % p);
        rows[i][j] = g[i][j];
        v /= p;
      }
    }
    if (rank(*fp, rows, t) == t) out.push_back(std::move(g));
  }
  return out;
}

Report criterion7() {
  Report r;
  std::mt19937_64 rng(7);
  std::ostringstream counts;
  for (unsigned p : {2u, 3u}) {
    for (unsigned t = 1; t <= 3; ++t) {
      auto grams = invertible_grams(p, t);
      const std::size_t full = grams.size();
      if (grams.size() > 200) {
        std::shuffle(grams.begin(), grams.end(), rng);
        grams.resize(40);
      }
      const BhMatrix fourier = kron_fourier(p, t);
      std::vector<BhMatrix> mats;
      for (const auto& g : grams) {
        for (unsigned a = 1; a < p; ++a) {
          BhMatrix m = form_matrix(BilinearForm(p, g), a);
          r.require(m.verified(), "form matrix is not BH");
          r.require(row_equivalence(fourier, m).has_value(), "form matrix not row-equivalent to kron_fourier");
          mats.push_back(std::move(m));
        }
      }
      for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
          r.require(row_equivalence(mats[i], mats[j]).has_value(), "form matrices not pairwise row-equivalent");
        }
      }
      counts << " p=" << p << ",t=" << t << ":" << grams.size() << "/" << full;
    }
  }
  r.note("Gram matrices used:" + counts.str());
  return r;
}

struct ConverseOutcome {
  bool bh = false, linear = false;
  std::size_t stab = 0, dim_q = 0, dim_fix = 0;
};

// dim fix(G) for an abelian phase-free group, from |G|.
ConverseOutcome converse_case(const FunctionalTable& t, BhMatrix h, const LinearCode& d) {
  ConverseOutcome out;
  out.bh = bh_verify(h);
  out.linear = linear_rows_check(h);
  const auto states = code_states(t, h, d);
  out.dim_q = span_rank(states);
  const auto stab = stab_of_span(states);
  out.stab = stab.size();
  const std::uint64_t space = power(t.base().size(), t.code().length() * d.length());
  out.dim_fix = static_cast<std::size_t>(space / out.stab);
  return out;
}

std::string show(const ConverseOutcome& o) {
  std::ostringstream s;
  s << "bh=" << (o.bh ? "yes" : "no") << " linear_rows=" << (o.linear ? "yes" : "no") << " |stab|=" << o.stab
    << " dim Q=" << o.dim_q << " dim fix(stab)=" << o.dim_fix;
  return s.str();
}

Report criterion8() {
  Report r;
  auto f2 = Field::prime(2);
  const auto c = LinearCode::make(f2, {{1, 1, 0}, {0, 1, 1}});
  const auto f4 = Field::make(2, 2);
  const auto t = table_make(c, f4);
  const LinearCode d = rep(f4, 2);
  const std::size_t bound = 1u << (3 * 2 - 2 * 1);

  // Normalized BH(4,2) whose column for the group identity is not column 0.
  BhMatrix scrambled(4, 2, kron_fourier(2, 2).exponents(), std::nullopt, std::vector<std::uint64_t>{1, 0, 2, 3});
  const auto bad = converse_case(t, scrambled, d);
  const auto good = converse_case(t, t.matrix(), d);
  r.note("BH(4,2) scrambled labels:  " + show(bad));
  r.note("BH(4,2) Fourier type:      " + show(good));
  r.require(bad.bh && !bad.linear, "scrambled matrix is not a nonlinear BH matrix");
  r.require(good.stab == bound && good.dim_fix == good.dim_q, "Fourier-type matrix: fix(stab(Q)) != Q");
  r.require(bad.stab < bound, "scrambled BH(4,2): |stab| = " + std::to_string(bad.stab) + ", not < " +
                                  std::to_string(bound) + " (balanced rows on F_2^2 are affine)");

  // The same contrapositive at order 8, where nonlinear rows exist.
  const auto c8 = LinearCode::make(f2, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  const auto f8 = Field::make(2, 3);
  const auto t8 = table_make(c8, f8);
  std::vector<std::size_t> swap67 = identity_perm(8);
  std::swap(swap67[6], swap67[7]);
  const auto bad8 = converse_case(t8, kron_fourier(2, 3).permute_columns(swap67), rep(f8, 2));
  const auto good8 = converse_case(t8, t8.matrix(), rep(f8, 2));
  r.note("BH(8,2) columns 6,7 swapped: " + show(bad8));
  r.note("BH(8,2) Fourier type:        " + show(good8));
  return r;
}

Report criterion9() {
  Report r;
  std::mt19937_64 rng(99);
  std::size_t instances = 0;
  for (unsigned p : {2u, 3u}) {
    for (unsigned rr : {1u, 2u}) {
      auto f = Field::make(p, rr);
      const oracle::NaiveField nf(*f);
      const unsigned unit = phase_modulus(p) / p;
      for (std::size_t n = 2; n <= 4; ++n) {
        if (power(f->size(), n) > 256) continue;
        for (std::size_t k = 1; k < n; ++k) {
          ++instances;
          const auto c = inst::random_code(rng, f, n, k, false);
          const auto t = table_make(c, Field::make(p, rr * static_cast<unsigned>(k)));
          const LinearCode perp = dual(c);
          const auto words = c.codewords();
          std::vector<StateVector> phis;
          for (Elem l = 0; l < t.ext().size(); ++l) phis.push_back(phi(t, l));
          const std::uint64_t total = power(f->size(), n);
          for (std::uint64_t i = 0; i < total; ++i) {
            const Vec u = oracle::index_vector(i, f->size(), n);
            bool annihilates = true;
            for (const auto& w : words) annihilates = annihilates && nf.trace(nf.dot(u, w)) == 0;
            r.require(annihilates == perp.contains(u), "trace annihilator != dual code");
            bool fixes = true;
            for (const auto& v : phis) fixes = fixes && apply(PauliElement::z_op(f, u), v) == v;
            r.require(fixes == perp.contains(u), "Z(u) fixes phi != u in dual code");
            for (std::uint64_t j = 0; j < total && total <= 64; ++j) {
              const Vec v = oracle::index_vector(j, f->size(), n);
              bool same = true;
              for (const auto& b : t.fp_basis()) same = same && t.rho(u, b) == t.rho(v, b);
              r.require(same == perp.contains(vec_sub(*f, u, v)), "rho_u = rho_v != u - v in dual code");
            }
          }
          for (Elem l = 0; l < t.ext().size(); ++l) {
            const Vec x = t.theta(l);
            for (const auto& w : words) r.require(t.rho(x, w) == t.eval(l, w), "rho_theta != f_lambda");
            r.require(t.theta_inverse(x) == l, "theta_inverse(theta) != id");
          }
          // Equal tensors force factors equal up to omega^{b_r}.
          std::uniform_int_distribution<Elem> pick_l(0, t.ext().size() - 1);
          for (int trial = 0; trial < 10; ++trial) {
            const unsigned b0 = static_cast<unsigned>(rng() % p), b1 = (p - b0) % p;
            const StateVector a0 = phi(t, pick_l(rng)), a1 = phi(t, pick_l(rng));
            auto shift = [&](const StateVector& v, unsigned b) {
              return apply(PauliElement(f, unit * b, Vec(n, 0), Vec(n, 0)), v);
            };
            const StateVector s0 = shift(a0, b0), s1 = shift(a1, b1);
            r.require(tensor(a0, a1) == tensor(s0, s1), "shifted tensors differ");
            const auto got = factor_phase_shifts({a0, a1}, {s0, s1});
            r.require(got && (*got)[0] == unit * b0 && (*got)[1] == unit * b1, "tensor shifts not recovered");
          }
          // Row-equivalent H' gives the same code space.
          if (power(f->size(), 2 * n) <= 4096) {
            BhMatrix h = t.matrix();
            auto perm = identity_perm(h.order());
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<unsigned> ex(h.exponents());
            for (std::size_t i = 0; i < h.order(); ++i) {
              for (std::size_t j = 0; j < h.order(); ++j) ex[i * h.order() + j] = (h.at(perm[i], j) + i) % p;
            }
            const LinearCode d = rep(t.ext_ptr(), 2);
            r.require(span_equal(code_states(t, h, d), code_states(t, BhMatrix(h.order(), p, ex), d)),
                      "row-equivalent matrices give different code spaces");
          }
        }
      }
    }
  }
  // Non-row-equivalent normalized H' gives a different code space.
  auto f2 = Field::prime(2);
  const auto c8 = LinearCode::make(f2, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  const auto f8 = Field::make(2, 3);
  const auto t8 = table_make(c8, f8);
  auto swap67 = identity_perm(8);
  std::swap(swap67[6], swap67[7]);
  const BhMatrix h8 = kron_fourier(2, 3).permute_columns(swap67);
  r.require(!row_equivalence(t8.matrix(), h8), "swapped BH(8,2) is row-equivalent");
  r.require(!span_equal(code_states(t8, rep(f8, 2)), code_states(t8, h8, rep(f8, 2))),
            "non-row-equivalent BH(8,2) gives the same code space");
  auto f3 = Field::prime(3);
  const auto c9 = LinearCode::make(f3, {{1, 0, 1}, {0, 1, 1}});
  const auto f9 = Field::make(3, 2);
  const auto t9 = table_make(c9, f9);
  auto swap78 = identity_perm(9);
  std::swap(swap78[7], swap78[8]);
  const BhMatrix h9 = kron_fourier(3, 2).permute_columns(swap78);
  r.require(!row_equivalence(t9.matrix(), h9), "swapped BH(9,3) is row-equivalent");
  r.require(!span_equal(code_states(t9, rep(f9, 2)), code_states(t9, h9, rep(f9, 2))),
            "non-row-equivalent BH(9,3) gives the same code space");
  r.note(std::to_string(instances) + " inner codes with q^n <= 256");
  return r;
}

// Calls fn on every qubit Pauli of symplectic weight exactly w.
void for_each_weight(std::size_t n, std::size_t w, const std::function<void(const Vec&, const Vec&)>& fn) {
  std::vector<std::size_t> pos(w);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    std::vector<unsigned> kind(w, 0);
    while (true) {
      Vec a(n, 0), b(n, 0);
      for (std::size_t i = 0; i < w; ++i) {
        a[pos[i]] = (kind[i] + 1) & 1;
        b[pos[i]] = (kind[i] + 1) >> 1;
      }
      fn(a, b);
      std::size_t i = 0;
      while (i < w && ++kind[i] == 3) kind[i++] = 0;
      if (i == w) break;
    }
    std::size_t i = w;
    while (i > 0 && pos[i - 1] == n - w + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
  }
}

Report criterion10() {
  Report r;
  auto f2 = Field::prime(2);
  for (auto [name, s] : {std::pair{"Shor", build(rep(f2, 3), rep(f2, 3))},
                         std::pair{"[[4,1]]", build(rep(f2, 2), rep(f2, 2))}}) {
    const std::size_t delta = distance(s);
    std::size_t light = 0, undetectable = 0;
    for (std::size_t w = 1; w < delta; ++w) {
      for_each_weight(s.length(), w, [&](const Vec& a, const Vec& b) {
        ++light;
        r.require(detectable(s, PauliElement(f2, 0, a, b)), std::string(name) + ": light error not detectable");
      });
    }
    for_each_weight(s.length(), delta, [&](const Vec& a, const Vec& b) {
      undetectable += !detectable(s, PauliElement(f2, 0, a, b));
    });
    r.require(undetectable > 0, std::string(name) + ": every weight-delta error is detectable");
    r.note(std::string(name) + ": delta=" + std::to_string(delta) + ", " + std::to_string(light) +
           " lighter errors detectable, " + std::to_string(undetectable) + " undetectable of weight delta");
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
      {"Shor reproduction", criterion1},
      {"nine-qutrit reproduction", criterion2},
      {"parameter law", criterion3},
      {"distance oracle equivalence", criterion4},
      {"kernel nullity", criterion5},
      {"corollaries", criterion6},
      {"bilinear form equivalences", criterion7},
      {"converse evidence", criterion8},
      {"lemma suite", criterion9},
      {"detectability", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << timing << ")";
    if (!r.ok) std::cout << ": " << r.failure;
    std::cout << '\n';
    for (const auto& d : r.details) std::cout << "        " << d << '\n';
    failed += !r.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
