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
#include <optional>
#include <vector>

#include "qbh/gf.hpp"

namespace qbh {

/// Reduced row echelon form. `rows` holds only the nonzero rows; row i has
/// its leading 1 in column pivots[i].
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::size_t ncols = 0;

  std::size_t rank() const { return rows.size(); }
};

Echelon rref(const Field& f, std::vector<Vec> rows, std::size_t ncols);
std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t ncols);

/// Residual of v after eliminating every pivot of e; zero iff v is in the
/// row space.
Vec reduce(const Field& f, const Echelon& e, Vec v);
bool in_span(const Field& f, const Echelon& e, const Vec& v);

/// Basis of {x : row . x = 0 for every row}, one vector per free column.
std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols);

/// Solves A x = b returning the lexicographically smallest solution, where
/// column 0 is the most significant position and values compare as packed
/// integers. The elimination is done once; each right-hand side is cheap.
class LexMinSolver {
 public:
  LexMinSolver(const Field& f, const std::vector<Vec>& a, std::size_t ncols);

  std::optional<Vec> solve(const Vec& b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  const Field* field_;
  std::size_t nrows_;
  std::size_t ncols_;
  // Row-reduced A with columns reversed, and the row transform applied to it.
  std::vector<Vec> reduced_;
  std::vector<Vec> transform_;
  std::vector<std::size_t> pivots_;
};

/// Coefficients c with sum_i c_i basis[i] = v, if v lies in the span.
std::optional<Vec> combination(const Field& f, const std::vector<Vec>& basis, const Vec& v);

}  // namespace qbh
