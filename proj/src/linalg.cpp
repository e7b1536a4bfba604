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

#include "qbh/linalg.hpp"

#include <utility>

#include "qbh/error.hpp"

namespace qbh {

namespace {

// In-place Gauss-Jordan on rows[*][0, ncols); any extra trailing columns are
// carried along. Returns pivot columns; rows are permuted so that the first
// pivots.size() rows are the pivot rows.
std::vector<std::size_t> eliminate(const Field& f, std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[r][j] != 0) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Field& f, std::vector<Vec> rows, std::size_t ncols) {
  for (const auto& row : rows) {
    if (row.size() != ncols) fail(ErrorKind::LengthMismatch, "row length differs from column count");
  }
  Echelon e;
  e.ncols = ncols;
  e.pivots = eliminate(f, rows, ncols);
  rows.resize(e.pivots.size());
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t ncols) {
  return rref(f, std::move(rows), ncols).rank();
}

Vec reduce(const Field& f, const Echelon& e, Vec v) {
  if (v.size() != e.ncols) fail(ErrorKind::LengthMismatch, "vector length differs from column count");
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Elem factor = v[e.pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (e.rows[i][j] != 0) v[j] = f.sub(v[j], f.mul(factor, e.rows[i][j]));
    }
  }
  return v;
}

bool in_span(const Field& f, const Echelon& e, const Vec& v) { return is_zero(reduce(f, e, v)); }

std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols) {
  Echelon e = rref(f, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      x[e.pivots[i]] = f.neg(e.rows[i][free]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

LexMinSolver::LexMinSolver(const Field& f, const std::vector<Vec>& a, std::size_t ncols)
    : field_(&f), nrows_(a.size()), ncols_(ncols) {
  // Augment reversed A with the identity to record the row transform.
  std::vector<Vec> work(nrows_, Vec(ncols_ + nrows_, 0));
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (a[i].size() != ncols_) fail(ErrorKind::LengthMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < ncols_; ++j) work[i][ncols_ - 1 - j] = a[i][j];
    work[i][ncols_ + i] = 1;
  }
  pivots_ = eliminate(f, work, ncols_);
  reduced_.resize(nrows_);
  transform_.resize(nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    reduced_[i].assign(work[i].begin(), work[i].begin() + ncols_);
    transform_[i].assign(work[i].begin() + ncols_, work[i].end());
  }
}

std::optional<Vec> LexMinSolver::solve(const Vec& b) const {
  const Field& f = *field_;
  if (b.size() != nrows_) fail(ErrorKind::LengthMismatch, "right-hand side length differs from row count");
  Vec tb(nrows_, 0);
  for (std::size_t i = 0; i < nrows_; ++i) tb[i] = dot(f, transform_[i], b);
  for (std::size_t i = pivots_.size(); i < nrows_; ++i) {
    if (tb[i] != 0) return std::nullopt;
  }
  // Pivots sit at the least significant positions available; with all free
  // (more significant) variables at zero this is the lexicographic minimum.
  Vec x(ncols_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    x[ncols_ - 1 - pivots_[i]] = tb[i];
  }
  return x;
}

std::optional<Vec> combination(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t len = v.size();
  std::vector<Vec> a(len, Vec(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != len) fail(ErrorKind::LengthMismatch, "basis vector length mismatch");
    for (std::size_t i = 0; i < len; ++i) a[i][j] = basis[j][i];
  }
  return LexMinSolver(f, a, basis.size()).solve(v);
}

}  // namespace qbh
