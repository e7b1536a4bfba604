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

#include "qbh/bh.hpp"

#include <map>
#include <string>

#include "qbh/error.hpp"
#include "qbh/gf.hpp"
#include "qbh/linalg.hpp"

namespace qbh {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 12;

std::uint64_t checked_power(unsigned p, unsigned t) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < t; ++i) {
    n *= p;
    if (n > kMaxOrder) fail(ErrorKind::BudgetExceeded, "matrix order exceeds 2^12");
  }
  return n;
}

std::vector<std::uint64_t> identity_labels(std::size_t n) {
  std::vector<std::uint64_t> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = i;
  return l;
}

}  // namespace

BhMatrix::BhMatrix(std::size_t order, unsigned p, std::vector<unsigned> exponents,
                   std::optional<std::vector<std::uint64_t>> row_labels,
                   std::optional<std::vector<std::uint64_t>> col_labels)
    : order_(order),
      p_(p),
      exponents_(std::move(exponents)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (!is_prime(p_)) fail(ErrorKind::NotPrime, std::to_string(p_) + " is not prime");
  if (order_ == 0) fail(ErrorKind::InvalidArgument, "matrix order must be positive");
  if (exponents_.size() != order_ * order_) fail(ErrorKind::LengthMismatch, "exponent count is not order^2");
  for (unsigned e : exponents_) {
    if (e >= p_) fail(ErrorKind::InvalidArgument, "exponent outside [0, p)");
  }
  if (row_labels_ && row_labels_->size() != order_) fail(ErrorKind::LengthMismatch, "row label count");
  if (col_labels_ && col_labels_->size() != order_) fail(ErrorKind::LengthMismatch, "column label count");
}

BhMatrix BhMatrix::permute_columns(std::span<const std::size_t> perm) const {
  if (perm.size() != order_) fail(ErrorKind::LengthMismatch, "permutation size");
  std::vector<unsigned> e(exponents_.size());
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) e[i * order_ + j] = at(i, perm[j]);
  }
  return BhMatrix(order_, p_, std::move(e), row_labels_, col_labels_);
}

BhMatrix BhMatrix::permute_rows(std::span<const std::size_t> perm) const {
  if (perm.size() != order_) fail(ErrorKind::LengthMismatch, "permutation size");
  std::vector<unsigned> e(exponents_.size());
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) e[i * order_ + j] = at(perm[i], j);
  }
  return BhMatrix(order_, p_, std::move(e), row_labels_, col_labels_);
}

bool is_butson_hadamard(const BhMatrix& m) {
  const std::size_t n = m.order();
  const unsigned p = m.modulus();
  if (n % p != 0) return false;
  const std::size_t expected = n / p;
  std::vector<std::size_t> counts(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      auto ri = m.row(i);
      auto rj = m.row(j);
      for (std::size_t k = 0; k < n; ++k) ++counts[(ri[k] + p - rj[k]) % p];
      for (auto c : counts) {
        if (c != expected) return false;
      }
    }
  }
  return true;
}

bool bh_verify(BhMatrix& m) {
  m.verified_ = is_butson_hadamard(m);
  return m.verified_;
}

std::vector<unsigned> index_to_vector(std::uint64_t index, unsigned p, unsigned t) {
  std::vector<unsigned> v(t);
  for (unsigned i = t; i-- > 0;) {
    v[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  return v;
}

std::uint64_t vector_to_index(std::span<const unsigned> v, unsigned p) {
  std::uint64_t idx = 0;
  for (unsigned x : v) idx = idx * p + x;
  return idx;
}

BhMatrix kron_fourier(unsigned p, unsigned t) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (t == 0) fail(ErrorKind::InvalidArgument, "t must be positive");
  const std::size_t n = checked_power(p, t);
  std::vector<std::vector<unsigned>> vecs(n);
  for (std::size_t i = 0; i < n; ++i) vecs[i] = index_to_vector(i, p, t);
  std::vector<unsigned> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (unsigned c = 0; c < t; ++c) acc += vecs[i][c] * vecs[j][c];
      e[i * n + j] = acc % p;
    }
  }
  BhMatrix m(n, p, std::move(e), identity_labels(n), identity_labels(n));
  bh_verify(m);
  return m;
}

BhMatrix normalize(const BhMatrix& m) {
  if (!is_butson_hadamard(m)) fail(ErrorKind::NotBh, "normalize requires a Butson-Hadamard matrix");
  const std::size_t n = m.order();
  const unsigned p = m.modulus();
  std::vector<unsigned> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (m.at(i, j) + p - m.at(i, 0)) % p;
  }
  std::vector<unsigned> first(e.begin(), e.begin() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (e[i * n + j] + p - first[j]) % p;
  }
  BhMatrix out(n, p, std::move(e), m.row_labels(), m.col_labels());
  bh_verify(out);
  return out;
}

std::optional<RowEquivalence> row_equivalence(const BhMatrix& from, const BhMatrix& to) {
  if (from.order() != to.order() || from.modulus() != to.modulus()) return std::nullopt;
  const std::size_t n = from.order();
  const unsigned p = from.modulus();
  auto shifted_key = [&](std::span<const unsigned> row) {
    std::vector<unsigned> key(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) key[j] = (row[j] + p - row[0]) % p;
    return key;
  };
  std::map<std::vector<unsigned>, std::vector<std::size_t>> buckets;
  for (std::size_t i = n; i-- > 0;) buckets[shifted_key(from.row(i))].push_back(i);

  RowEquivalence w;
  w.permutation.resize(n);
  w.shifts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = buckets.find(shifted_key(to.row(i)));
    if (it == buckets.end() || it->second.empty()) return std::nullopt;
    const std::size_t src = it->second.back();
    it->second.pop_back();
    w.permutation[i] = src;
    w.shifts[i] = (to.at(i, 0) + p - from.at(src, 0)) % p;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((from.at(w.permutation[i], j) + w.shifts[i]) % p != to.at(i, j)) return std::nullopt;
    }
  }
  return w;
}

bool linear_rows_check(const BhMatrix& m) {
  const std::size_t n = m.order();
  const unsigned p = m.modulus();
  unsigned t = 0;
  std::uint64_t size = 1;
  while (size < n) {
    size *= p;
    ++t;
  }
  if (size != n) fail(ErrorKind::LabelsNotGroup, "order is not a power of p");
  std::vector<std::size_t> column_of(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t label = m.col_label(j);
    if (label >= n || column_of[label] != n) {
      fail(ErrorKind::LabelsNotGroup, "column labels are not a permutation of F_p^t");
    }
    column_of[label] = j;
  }
  // A map on F_p^t is additive iff it equals sum_i x_i e(u_i) on every x.
  std::vector<std::uint64_t> unit(t);
  for (unsigned i = 0; i < t; ++i) unit[i] = i == 0 ? 1 : unit[i - 1] * p;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = m.row(r);
    for (std::uint64_t x = 0; x < n; ++x) {
      unsigned expect = 0;
      std::uint64_t v = x;
      for (unsigned i = 0; i < t; ++i) {
        expect += static_cast<unsigned>(v % p) * row[column_of[unit[i]]];
        v /= p;
      }
      if (row[column_of[x]] != expect % p) return false;
    }
  }
  return true;
}

BilinearForm::BilinearForm(unsigned p, std::vector<std::vector<unsigned>> gram)
    : p_(p), gram_(std::move(gram)) {
  if (!is_prime(p_)) fail(ErrorKind::NotPrime, std::to_string(p_) + " is not prime");
  for (const auto& row : gram_) {
    if (row.size() != gram_.size()) fail(ErrorKind::LengthMismatch, "Gram matrix must be square");
    for (unsigned x : row) {
      if (x >= p_) fail(ErrorKind::InvalidArgument, "Gram entry outside [0, p)");
    }
  }
}

bool BilinearForm::non_degenerate() const {
  const auto fp = Field::prime(p_);
  std::vector<Vec> rows;
  for (const auto& r : gram_) rows.emplace_back(r.begin(), r.end());
  return rank(*fp, rows, gram_.size()) == gram_.size();
}

unsigned BilinearForm::operator()(std::span<const unsigned> x, std::span<const unsigned> y) const {
  unsigned acc = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (x[i] == 0) continue;
    unsigned inner = 0;
    for (std::size_t j = 0; j < gram_.size(); ++j) inner += gram_[i][j] * y[j];
    acc += x[i] * (inner % p_);
  }
  return acc % p_;
}

BhMatrix form_matrix(const BilinearForm& form, unsigned scalar) {
  const unsigned p = form.modulus();
  if (scalar % p == 0) fail(ErrorKind::InvalidArgument, "character scalar must be a unit of F_p");
  if (!form.non_degenerate()) fail(ErrorKind::DegenerateForm, "Gram matrix is singular over F_p");
  const unsigned t = static_cast<unsigned>(form.dimension());
  const std::size_t n = checked_power(p, t);
  std::vector<std::vector<unsigned>> vecs(n);
  for (std::size_t i = 0; i < n; ++i) vecs[i] = index_to_vector(i, p, t);
  std::vector<unsigned> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (scalar % p) * form(vecs[i], vecs[j]) % p;
  }
  BhMatrix m(n, p, std::move(e), identity_labels(n), identity_labels(n));
  bh_verify(m);
  return m;
}

}  // namespace qbh
