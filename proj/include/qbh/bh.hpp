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
#include <optional>
#include <span>
#include <vector>

namespace qbh {

/// A square matrix of p-th roots of unity stored by exponent: entry (i, j)
/// stands for omega^{e_ij} with omega = exp(2 pi i / p).
///
/// Row and column labels are optional packed integers naming group elements;
/// when absent, position i is taken to be label i.
class BhMatrix {
 public:
  BhMatrix(std::size_t order, unsigned p, std::vector<unsigned> exponents,
           std::optional<std::vector<std::uint64_t>> row_labels = std::nullopt,
           std::optional<std::vector<std::uint64_t>> col_labels = std::nullopt);

  std::size_t order() const { return order_; }
  unsigned modulus() const { return p_; }
  unsigned at(std::size_t i, std::size_t j) const { return exponents_[i * order_ + j]; }
  std::span<const unsigned> row(std::size_t i) const {
    return {exponents_.data() + i * order_, order_};
  }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  const std::optional<std::vector<std::uint64_t>>& row_labels() const { return row_labels_; }
  const std::optional<std::vector<std::uint64_t>>& col_labels() const { return col_labels_; }
  std::uint64_t col_label(std::size_t j) const { return col_labels_ ? (*col_labels_)[j] : j; }

  /// Set only by bh_verify after the orthogonality check passed.
  bool verified() const { return verified_; }

  /// Same matrix with columns reordered: new column j is old column perm[j].
  /// Labels stay in place.
  BhMatrix permute_columns(std::span<const std::size_t> perm) const;
  BhMatrix permute_rows(std::span<const std::size_t> perm) const;

  friend bool operator==(const BhMatrix& a, const BhMatrix& b) {
    return a.order_ == b.order_ && a.p_ == b.p_ && a.exponents_ == b.exponents_;
  }

 private:
  friend bool bh_verify(BhMatrix& m);

  std::size_t order_;
  unsigned p_;
  std::vector<unsigned> exponents_;
  std::optional<std::vector<std::uint64_t>> row_labels_;
  std::optional<std::vector<std::uint64_t>> col_labels_;
  bool verified_ = false;
};

/// Pairwise row orthogonality. For prime p, sum_j omega^{d_j} = 0 exactly when
/// every residue occurs equally often among the d_j, so each pair of rows
/// must have every exponent difference exactly order/p times.
bool is_butson_hadamard(const BhMatrix& m);

/// is_butson_hadamard, recording the result in m.verified().
bool bh_verify(BhMatrix& m);

/// [x . y mod p] over x, y in F_p^t in lexicographic order; the t-fold
/// Kronecker power of the order-p Fourier matrix.
BhMatrix kron_fourier(unsigned p, unsigned t);

/// Scales rows then columns so that the first row and column are all 0.
BhMatrix normalize(const BhMatrix& m);

/// Witness that rows of `to` are rows of `from` up to a scalar:
/// to.row(i) = from.row(permutation[i]) + shifts[i] (mod p).
struct RowEquivalence {
  std::vector<std::size_t> permutation;
  std::vector<unsigned> shifts;
};

std::optional<RowEquivalence> row_equivalence(const BhMatrix& from, const BhMatrix& to);

/// Whether every row, read as a function of the column label in F_p^t, is
/// additive. Labels must be a permutation of [0, p^t).
bool linear_rows_check(const BhMatrix& m);

/// A bilinear form on F_p^t given by its Gram matrix.
class BilinearForm {
 public:
  BilinearForm(unsigned p, std::vector<std::vector<unsigned>> gram);

  unsigned modulus() const { return p_; }
  std::size_t dimension() const { return gram_.size(); }
  const std::vector<std::vector<unsigned>>& gram() const { return gram_; }
  bool non_degenerate() const;
  unsigned operator()(std::span<const unsigned> x, std::span<const unsigned> y) const;

 private:
  unsigned p_;
  std::vector<std::vector<unsigned>> gram_;
};

/// [a * B(x, y) mod p] over x, y in F_p^t in lexicographic order.
BhMatrix form_matrix(const BilinearForm& form, unsigned scalar);

/// Digits of a lexicographic index in F_p^t (first coordinate most significant).
std::vector<unsigned> index_to_vector(std::uint64_t index, unsigned p, unsigned t);
std::uint64_t vector_to_index(std::span<const unsigned> v, unsigned p);

}  // namespace qbh
