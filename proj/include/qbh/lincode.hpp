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
#include <span>
#include <vector>

#include "qbh/error.hpp"
#include "qbh/gf.hpp"

namespace qbh {

using Codeword = Vec;

/// A linear code over a finite field, kept in reduced row echelon form so that
/// two codes are equal exactly when their generator matrices are equal.
///
/// Dimension 0 is representable (the zero code) because it arises as the dual
/// of the full space; `make` itself refuses an all-zero generator.
class LinearCode {
 public:
  static LinearCode make(FieldPtr field, const std::vector<Vec>& rows);
  static LinearCode zero(FieldPtr field, std::size_t length);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return generator_.size(); }
  bool is_zero() const { return generator_.empty(); }
  const std::vector<Vec>& generator() const { return generator_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// q^dimension; fails with BudgetExceeded past the given cap.
  std::uint64_t size(std::uint64_t budget = kDefaultBudget) const;

  Codeword encode(std::span<const Elem> message) const;
  /// The message of a codeword (its entries at the pivot columns).
  Vec message_of(std::span<const Elem> word) const;
  bool contains(std::span<const Elem> word) const;

  /// Message with index `index` in lexicographic packed order: the first
  /// message symbol is the most significant base-q digit.
  Vec message(std::uint64_t index) const;
  std::uint64_t message_index(std::span<const Elem> message) const;
  Codeword codeword(std::uint64_t index) const { return encode(message(index)); }
  std::vector<Codeword> codewords(std::uint64_t budget = kDefaultBudget) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field_ == b.field_ && a.length_ == b.length_ && a.generator_ == b.generator_;
  }

 private:
  LinearCode(FieldPtr field, std::size_t length) : field_(std::move(field)), length_(length) {}

  FieldPtr field_;
  std::size_t length_;
  std::vector<Vec> generator_;
  std::vector<std::size_t> pivots_;
};

LinearCode code_make(FieldPtr field, const std::vector<Vec>& rows);

/// Dual under the standard dot product.
LinearCode dual(const LinearCode& code);

std::size_t hamming_weight(std::span<const Elem> v);

/// Minimum weight over nonzero codewords by exhaustive enumeration.
std::size_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Minimum weight of v + code, by exhaustive enumeration of the coset.
std::size_t coset_leader_weight(const LinearCode& code, std::span<const Elem> v,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace qbh
