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

#include "qbh/statevec.hpp"

#include <gmpxx.h>

#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "qbh/linalg.hpp"

namespace qbh {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t budget, const char* what) {
  if (b != 0 && a > budget / b) fail(ErrorKind::BudgetExceeded, std::string(what) + " exceeds the enumeration budget");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t budget, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) v = checked_mul(v, base, budget, what);
  return v;
}

void check_same_space(const StateVector& a, const StateVector& b) {
  if (a.field_ptr() != b.field_ptr()) fail(ErrorKind::DimensionMismatch, "states over different fields");
  if (a.length() != b.length()) fail(ErrorKind::LengthMismatch, "states of different length");
}

// Q(zeta_P) with coordinates on 1, zeta, ..., zeta^{d-1}, d = phi(P).
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned modulus) : modulus_(modulus), dim_(modulus == 4 ? 2 : modulus - 1) {}

  std::size_t dim() const { return dim_; }

  std::vector<mpq_class> from(const CycAmp& a) const {
    std::vector<mpq_class> v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = static_cast<long>(a.coeffs()[j]);
    return v;
  }

  static bool is_zero(const std::vector<mpq_class>& a) {
    for (const auto& x : a) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }

  std::vector<mpq_class> mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
    std::vector<mpq_class> full(modulus_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) full[(i + j) % modulus_] += a[i] * b[j];
    }
    return reduce(std::move(full));
  }

  // 1/a as the product of the other Galois conjugates over the norm.
  std::vector<mpq_class> inverse(const std::vector<mpq_class>& a) const {
    std::vector<mpq_class> prod(dim_);
    prod[0] = 1;
    for (unsigned t = 2; t < modulus_; ++t) {
      if (std::gcd(t, modulus_) == 1) prod = mul(prod, conjugate(a, t));
    }
    const std::vector<mpq_class> norm = mul(a, prod);
    for (auto& x : prod) x /= norm[0];
    return prod;
  }

 private:
  std::vector<mpq_class> reduce(std::vector<mpq_class> full) const {
    if (modulus_ == 4) return {full[0] - full[2], full[1] - full[3]};
    const mpq_class top = full[modulus_ - 1];
    full.resize(dim_);
    for (auto& x : full) x -= top;
    return full;
  }

  std::vector<mpq_class> conjugate(const std::vector<mpq_class>& a, unsigned t) const {
    std::vector<mpq_class> full(modulus_);
    for (std::size_t j = 0; j < dim_; ++j) full[(j * t) % modulus_] += a[j];
    return reduce(std::move(full));
  }

  unsigned modulus_;
  std::size_t dim_;
};

Codeword column_codeword(const FunctionalTable& table, std::uint64_t label) {
  const unsigned p = table.base().characteristic();
  std::vector<unsigned> coords(table.fp_dimension());
  for (auto& c : coords) {
    c = static_cast<unsigned>(label % p);
    label /= p;
  }
  return table.from_coordinates(coords);
}

std::size_t row_for(const BhMatrix& h, Elem lambda) {
  if (const auto& labels = h.row_labels()) {
    for (std::size_t i = 0; i < labels->size(); ++i) {
      if ((*labels)[i] == lambda) return i;
    }
    fail(ErrorKind::InvalidArgument, "no row labelled " + std::to_string(lambda));
  }
  if (lambda >= h.order()) fail(ErrorKind::InvalidArgument, "row index out of range");
  return lambda;
}

StateVector tensor_all(const std::vector<StateVector>& parts, std::uint64_t budget) {
  StateVector acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = tensor(acc, parts[i], budget);
  return acc;
}

}  // namespace

CycAmp::CycAmp(unsigned modulus) : c_(modulus, 0) {
  if (modulus < 3) fail(ErrorKind::InvalidArgument, "phase modulus must be 4 or an odd prime");
}

CycAmp CycAmp::root(unsigned modulus, std::uint64_t exponent) {
  CycAmp a(modulus);
  a.c_[exponent % modulus] = 1;
  a.canonicalize();
  return a;
}

CycAmp CycAmp::integer(unsigned modulus, long long value) {
  CycAmp a(modulus);
  a.c_[0] = value;
  return a;
}

void CycAmp::canonicalize() {
  const std::size_t P = c_.size();
  if (P == 4) {
    c_[0] -= c_[2];
    c_[1] -= c_[3];
    c_[2] = c_[3] = 0;
    return;
  }
  const long long top = c_[P - 1];
  for (auto& x : c_) x -= top;
}

bool CycAmp::is_zero() const {
  for (long long x : c_) {
    if (x != 0) return false;
  }
  return true;
}

CycAmp CycAmp::conj() const {
  const std::size_t P = c_.size();
  CycAmp out(modulus());
  for (std::size_t j = 0; j < P; ++j) out.c_[(P - j) % P] += c_[j];
  out.canonicalize();
  return out;
}

std::optional<unsigned> CycAmp::root_exponent() const {
  for (unsigned e = 0; e < modulus(); ++e) {
    if (*this == root(modulus(), e)) return e;
  }
  return std::nullopt;
}

CycAmp& CycAmp::operator+=(const CycAmp& o) {
  if (o.modulus() != modulus()) fail(ErrorKind::DimensionMismatch, "amplitudes with different phase moduli");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  canonicalize();
  return *this;
}

CycAmp operator-(const CycAmp& a) {
  CycAmp out(a.modulus());
  for (std::size_t j = 0; j < a.c_.size(); ++j) out.c_[j] = -a.c_[j];
  out.canonicalize();
  return out;
}

CycAmp operator-(const CycAmp& a, const CycAmp& b) { return a + (-b); }

CycAmp operator*(const CycAmp& a, const CycAmp& b) {
  if (a.modulus() != b.modulus()) fail(ErrorKind::DimensionMismatch, "amplitudes with different phase moduli");
  const std::size_t P = a.c_.size();
  CycAmp out(a.modulus());
  for (std::size_t i = 0; i < P; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < P; ++j) out.c_[(i + j) % P] += a.c_[i] * b.c_[j];
  }
  out.canonicalize();
  return out;
}

StateVector::StateVector(FieldPtr field, std::size_t length, unsigned scale)
    : field_(std::move(field)), length_(length), scale_(scale) {
  // Labels must fit in 63 bits.
  checked_pow(field_->size(), length_, std::uint64_t{1} << 63, "label space");
}

CycAmp StateVector::at(std::uint64_t label) const {
  auto it = amps_.find(label);
  return it == amps_.end() ? CycAmp(modulus()) : it->second;
}

void StateVector::add(std::uint64_t label, const CycAmp& amp) {
  auto [it, inserted] = amps_.try_emplace(label, amp);
  if (!inserted) it->second += amp;
  if (it->second.is_zero()) amps_.erase(it);
}

std::uint64_t label_of(const Field& f, std::span<const Elem> x) {
  std::uint64_t label = 0;
  for (Elem e : x) label = label * f.size() + e;
  return label;
}

Vec label_vector(const Field& f, std::size_t length, std::uint64_t label) {
  Vec x(length);
  for (std::size_t i = length; i-- > 0;) {
    x[i] = static_cast<Elem>(label % f.size());
    label /= f.size();
  }
  return x;
}

StateVector basis_state(const FieldPtr& field, std::span<const Elem> x) {
  StateVector v(field, x.size());
  v.add(label_of(*field, x), CycAmp::integer(v.modulus(), 1));
  return v;
}

StateVector phi(const FunctionalTable& table, Elem lambda, std::uint64_t budget) {
  const LinearCode& code = table.code();
  const std::uint64_t size = code.size(budget);
  StateVector v(code.field_ptr(), code.length(), static_cast<unsigned>(code.dimension()));
  const unsigned unit = v.modulus() / code.field().characteristic();
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const Vec msg = code.message(idx);
    const unsigned e = table.eval_message(lambda, msg);
    v.add(label_of(code.field(), code.encode(msg)), CycAmp::root(v.modulus(), e * unit));
  }
  return v;
}

StateVector phi(const FunctionalTable& table, const BhMatrix& h, std::size_t row) {
  const LinearCode& code = table.code();
  if (h.modulus() != code.field().characteristic()) fail(ErrorKind::DimensionMismatch, "BH modulus differs from p");
  if (h.order() != code.size()) fail(ErrorKind::DimensionMismatch, "BH order differs from |C|");
  if (row >= h.order()) fail(ErrorKind::InvalidArgument, "row index out of range");
  StateVector v(code.field_ptr(), code.length(), static_cast<unsigned>(code.dimension()));
  const unsigned unit = v.modulus() / h.modulus();
  for (std::size_t j = 0; j < h.order(); ++j) {
    const Codeword c = column_codeword(table, h.col_label(j));
    v.add(label_of(code.field(), c), CycAmp::root(v.modulus(), h.at(row, j) * unit));
  }
  if (v.amplitudes().size() != h.order()) fail(ErrorKind::LabelsNotGroup, "column labels repeat a codeword");
  return v;
}

StateVector big_phi(const FunctionalTable& table, const LinearCode& outer, std::span<const Elem> lambda,
                    std::uint64_t budget) {
  if (!outer.contains(lambda)) fail(ErrorKind::NotACodeword, "Lambda is not a codeword of D");
  checked_pow(table.code().size(budget), lambda.size(), budget, "tensor support");
  std::vector<StateVector> parts;
  for (Elem l : lambda) parts.push_back(phi(table, l, budget));
  return tensor_all(parts, budget);
}

StateVector big_phi(const FunctionalTable& table, const BhMatrix& h, std::span<const Elem> lambda,
                    std::uint64_t budget) {
  if (lambda.empty()) fail(ErrorKind::LengthMismatch, "empty Lambda");
  checked_pow(h.order(), lambda.size(), budget, "tensor support");
  std::vector<StateVector> parts;
  for (Elem l : lambda) parts.push_back(phi(table, h, row_for(h, l)));
  return tensor_all(parts, budget);
}

std::vector<StateVector> code_states(const FunctionalTable& table, const LinearCode& outer, std::uint64_t budget) {
  const std::uint64_t count = outer.size(budget);
  std::vector<StateVector> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(big_phi(table, outer, outer.codeword(i), budget));
  return out;
}

std::vector<StateVector> code_states(const FunctionalTable& table, const BhMatrix& h, const LinearCode& outer,
                                     std::uint64_t budget) {
  const std::uint64_t count = outer.size(budget);
  std::vector<StateVector> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(big_phi(table, h, outer.codeword(i), budget));
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b, std::uint64_t budget) {
  if (a.field_ptr() != b.field_ptr()) fail(ErrorKind::DimensionMismatch, "states over different fields");
  checked_mul(a.amplitudes().size(), b.amplitudes().size(), budget, "tensor support");
  StateVector out(a.field_ptr(), a.length() + b.length(), a.scale() + b.scale());
  const std::uint64_t shift = checked_pow(a.field().size(), b.length(), std::uint64_t{1} << 63, "label space");
  for (const auto& [la, xa] : a.amplitudes()) {
    for (const auto& [lb, xb] : b.amplitudes()) out.add(la * shift + lb, xa * xb);
  }
  return out;
}

std::vector<StateVector> equal_sum_states(const LinearCode& code, std::size_t m, std::uint64_t budget) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "need m >= 1");
  const Field& f = code.field();
  const std::uint64_t size = code.size(budget);
  const std::uint64_t tuples = checked_pow(size, m, budget, "tuple enumeration");
  std::vector<StateVector> out(size, StateVector(code.field_ptr(), code.length() * m));
  const std::vector<Codeword> words = code.codewords(budget);
  const CycAmp one = CycAmp::integer(out.front().modulus(), 1);
  std::vector<std::uint64_t> idx(m, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    Vec sum(code.length(), 0);
    Vec concat;
    for (std::size_t i = 0; i < m; ++i) {
      sum = vec_add(f, sum, words[idx[i]]);
      concat.insert(concat.end(), words[idx[i]].begin(), words[idx[i]].end());
    }
    out[code.message_index(code.message_of(sum))].add(label_of(f, concat), one);
    for (std::size_t i = m; i-- > 0;) {
      if (++idx[i] < size) break;
      idx[i] = 0;
    }
  }
  return out;
}

StateVector apply(const PauliElement& e, const StateVector& v) {
  if (e.field_ptr() != v.field_ptr()) fail(ErrorKind::DimensionMismatch, "operator and state over different fields");
  if (e.length() != v.length()) fail(ErrorKind::LengthMismatch, "operator and state of different length");
  const Field& f = v.field();
  const unsigned P = v.modulus();
  const unsigned unit = P / f.characteristic();
  StateVector out(v.field_ptr(), v.length(), v.scale());
  for (const auto& [label, amp] : v.amplitudes()) {
    const Vec x = label_vector(f, v.length(), label);
    const unsigned phase = e.phase() + unit * f.trace(dot(f, e.z(), x));
    out.add(label_of(f, vec_add(f, x, e.x())), amp * CycAmp::root(P, phase));
  }
  return out;
}

CycAmp inner(const StateVector& a, const StateVector& b) {
  check_same_space(a, b);
  CycAmp acc(a.modulus());
  for (const auto& [label, amp] : a.amplitudes()) {
    auto it = b.amplitudes().find(label);
    if (it != b.amplitudes().end()) acc += amp.conj() * it->second;
  }
  return acc;
}

bool has_unit_norm(const StateVector& v) {
  const std::uint64_t target = checked_pow(v.field().size(), v.scale(), std::uint64_t{1} << 62, "norm");
  return inner(v, v) == CycAmp::integer(v.modulus(), static_cast<long long>(target));
}

std::size_t span_rank(const std::vector<StateVector>& states, std::uint64_t budget) {
  if (states.empty()) return 0;
  for (const auto& s : states) check_same_space(states.front(), s);
  std::map<std::uint64_t, std::size_t> column;
  for (const auto& s : states) {
    for (const auto& kv : s.amplitudes()) column.emplace(kv.first, 0);
  }
  checked_mul(states.size(), column.size(), budget, "amplitude matrix");
  std::size_t next = 0;
  for (auto& kv : column) kv.second = next++;

  const Cyclotomic ring(states.front().modulus());
  using Entry = std::vector<mpq_class>;
  std::vector<std::vector<Entry>> rows(states.size(), std::vector<Entry>(column.size(), Entry(ring.dim())));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& [label, amp] : states[i].amplitudes()) rows[i][column[label]] = ring.from(amp);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && Cyclotomic::is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Entry inv = ring.inverse(rows[rank][col]);
    for (std::size_t j = col; j < column.size(); ++j) {
      if (!Cyclotomic::is_zero(rows[rank][j])) rows[rank][j] = ring.mul(rows[rank][j], inv);
    }
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (Cyclotomic::is_zero(rows[i][col])) continue;
      const Entry factor = rows[i][col];
      for (std::size_t j = col; j < column.size(); ++j) {
        if (Cyclotomic::is_zero(rows[rank][j])) continue;
        const Entry prod = ring.mul(factor, rows[rank][j]);
        for (std::size_t d = 0; d < ring.dim(); ++d) rows[i][j][d] -= prod[d];
      }
    }
    ++rank;
  }
  return rank;
}

bool span_equal(const std::vector<StateVector>& a, const std::vector<StateVector>& b, std::uint64_t budget) {
  const std::size_t ra = span_rank(a, budget);
  const std::size_t rb = span_rank(b, budget);
  if (ra != rb) return false;
  std::vector<StateVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, budget) == ra;
}

std::vector<PauliElement> stab_of_span(const std::vector<StateVector>& states, std::uint64_t budget) {
  if (states.empty()) fail(ErrorKind::InvalidArgument, "need at least one spanning state");
  for (const auto& s : states) check_same_space(states.front(), s);
  const StateVector& v0 = states.front();
  if (v0.amplitudes().empty()) fail(ErrorKind::InvalidArgument, "zero state");
  const FieldPtr& fptr = v0.field_ptr();
  const Field& f = *fptr;
  const std::size_t n = v0.length();
  const unsigned P = v0.modulus();
  const unsigned unit = P / f.characteristic();
  const std::uint64_t space = checked_pow(f.size(), n, budget, "Pauli enumeration");
  checked_mul(checked_mul(space, space, budget, "Pauli enumeration"), P, budget, "Pauli enumeration");

  struct Term {
    Vec x;
    CycAmp amp;
  };
  std::vector<std::vector<Term>> terms(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (const auto& [label, amp] : states[s].amplitudes()) terms[s].push_back({label_vector(f, n, label), amp});
  }
  std::vector<CycAmp> roots;
  for (unsigned c = 0; c < P; ++c) roots.push_back(CycAmp::root(P, c));

  std::vector<PauliElement> found;
  for (std::uint64_t al = 0; al < space; ++al) {
    const Vec a = label_vector(f, n, al);
    // The shift must preserve the support of every spanning state.
    std::vector<std::vector<std::uint64_t>> target(states.size());
    bool ok = true;
    for (std::size_t s = 0; s < states.size() && ok; ++s) {
      for (const auto& t : terms[s]) {
        const std::uint64_t y = label_of(f, vec_add(f, t.x, a));
        if (!states[s].amplitudes().contains(y)) {
          ok = false;
          break;
        }
        target[s].push_back(y);
      }
    }
    if (!ok) continue;
    for (std::uint64_t bl = 0; bl < space; ++bl) {
      const Vec b = label_vector(f, n, bl);
      // Phase fixed by the first term of the first state.
      const Term& t0 = terms[0][0];
      const CycAmp moved = t0.amp * roots[(unit * f.trace(dot(f, b, t0.x))) % P];
      const CycAmp want = v0.amplitudes().at(target[0][0]);
      std::optional<unsigned> phase;
      for (unsigned c = 0; c < P && !phase; ++c) {
        if (roots[c] * moved == want) phase = c;
      }
      if (!phase) continue;
      bool fixes = true;
      for (std::size_t s = 0; s < states.size() && fixes; ++s) {
        for (std::size_t i = 0; i < terms[s].size(); ++i) {
          const Term& t = terms[s][i];
          const unsigned e = (*phase + unit * f.trace(dot(f, b, t.x))) % P;
          if (!(roots[e] * t.amp == states[s].amplitudes().at(target[s][i]))) {
            fixes = false;
            break;
          }
        }
      }
      if (fixes) found.emplace_back(fptr, *phase, a, b);
    }
  }

  std::set<std::tuple<unsigned, Vec, Vec>> members;
  for (const auto& g : found) members.emplace(g.phase(), g.x(), g.z());
  for (const auto& g : found) {
    for (const auto& h : found) {
      const PauliElement gh = mul(g, h);
      if (!members.contains({gh.phase(), gh.x(), gh.z()}) || !commutes(g, h)) {
        fail(ErrorKind::InvalidArgument, "stabilizer set is not an abelian group");
      }
    }
  }
  return found;
}

std::size_t fix_dim(const StabilizerCode& code, std::uint64_t budget) {
  const Field& f = code.field();
  const std::size_t n = code.length();
  const std::uint64_t space = checked_pow(f.size(), n, budget, "label space");
  const unsigned P = phase_modulus(f.characteristic());
  const unsigned unit = P / f.characteristic();
  std::vector<int> phase(space, -1);
  std::size_t dim = 0;
  for (std::uint64_t root = 0; root < space; ++root) {
    if (phase[root] >= 0) continue;
    phase[root] = 0;
    bool consistent = true;
    std::deque<std::uint64_t> queue{root};
    while (!queue.empty()) {
      const std::uint64_t y = queue.front();
      queue.pop_front();
      const Vec x = label_vector(f, n, y);
      for (const auto& g : code.generators()) {
        // g fixes v iff v(x + a) = omega^{c + tr(b.x)} v(x).
        const std::uint64_t to = label_of(f, vec_add(f, x, g.x()));
        const int want = static_cast<int>((phase[y] + g.phase() + unit * f.trace(dot(f, g.z(), x))) % P);
        if (phase[to] < 0) {
          phase[to] = want;
          queue.push_back(to);
        } else if (phase[to] != want) {
          consistent = false;
        }
      }
    }
    dim += consistent ? 1 : 0;
  }
  return dim;
}

std::optional<std::vector<unsigned>> factor_phase_shifts(const std::vector<StateVector>& a,
                                                         const std::vector<StateVector>& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "factor lists differ in length");
  std::vector<unsigned> shifts;
  for (std::size_t r = 0; r < a.size(); ++r) {
    check_same_space(a[r], b[r]);
    if (a[r].scale() != b[r].scale() || a[r].amplitudes().size() != b[r].amplitudes().size() ||
        a[r].amplitudes().empty()) {
      return std::nullopt;
    }
    const unsigned P = a[r].modulus();
    const auto& [label, amp] = *a[r].amplitudes().begin();
    std::optional<unsigned> e;
    for (unsigned c = 0; c < P && !e; ++c) {
      if (CycAmp::root(P, c) * amp == b[r].at(label)) e = c;
    }
    if (!e) return std::nullopt;
    for (const auto& [l, x] : a[r].amplitudes()) {
      if (!(CycAmp::root(P, *e) * x == b[r].at(l))) return std::nullopt;
    }
    shifts.push_back(*e);
  }
  return shifts;
}

std::string dump(const StateVector& v) {
  std::ostringstream out;
  for (const auto& [label, amp] : v.amplitudes()) {
    out << label << " :";
    for (long long c : amp.coeffs()) out << ' ' << c;
    out << ' ' << v.scale() << '\n';
  }
  return out.str();
}

}  // namespace qbh
