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
#include <span>
#include <vector>

#include "qbh/bh.hpp"
#include "qbh/gf.hpp"
#include "qbh/linalg.hpp"
#include "qbh/lincode.hpp"

namespace qbh {

/// The F_p-isomorphism lambda -> f_lambda from F_{q^k} onto the F_p-linear
/// functionals on a k-dimensional code C over F_q:
///
///   f_lambda(c) = tr_{q^k/p}(lambda * pack(msg(c)))
///
/// where msg(c) is the message of c under the echelon generator and pack sends
/// F_q^k to F_{q^k} through a fixed F_q-basis beta_0..beta_{k-1} (powers of the
/// smallest element generating F_{q^k} over F_q).
///
/// C is viewed as an F_p-space with basis c_b = x^i * g_j, b = j*r + i, where
/// g_j are generator rows and x generates F_q over F_p. In these coordinates
/// f_lambda(c) = sum_{a,b} lambda_a G[a][b] c_b with lambda_a the digits of
/// lambda; G is the (invertible) gram() matrix.
class FunctionalTable {
 public:
  static FunctionalTable make(LinearCode code, FieldPtr ext);

  const LinearCode& code() const { return code_; }
  const Field& base() const { return code_.field(); }
  const Field& ext() const { return *ext_; }
  const FieldPtr& ext_ptr() const { return ext_; }
  const Embedding& embedding() const { return *embedding_; }
  const Vec& basis() const { return beta_; }
  /// r * k, the F_p-dimension of both F_{q^k} and C.
  std::size_t fp_dimension() const { return fp_basis_.size(); }

  Elem pack(std::span<const Elem> message) const;
  /// f_lambda(c); c must be a codeword.
  unsigned eval(Elem lambda, std::span<const Elem> word) const;
  unsigned eval_message(Elem lambda, std::span<const Elem> message) const;

  const std::vector<std::vector<unsigned>>& gram() const { return gram_; }
  /// The codewords c_b.
  const std::vector<Codeword>& fp_basis() const { return fp_basis_; }
  std::vector<unsigned> coordinates(std::span<const Elem> word) const;
  Codeword from_coordinates(std::span<const unsigned> coords) const;

  /// rho_x(c) = tr_{q/p}(c . x).
  unsigned rho(std::span<const Elem> x, std::span<const Elem> word) const;
  /// Lexicographically smallest x with rho_x = f_lambda.
  Vec theta(Elem lambda) const;
  /// The unique lambda with f_lambda = rho_x.
  Elem theta_inverse(std::span<const Elem> x) const;

  /// H = [f_lambda(c)] with rows lambda in packed order and columns the
  /// codewords in message order. Column labels are the F_p coordinates of
  /// each codeword packed base p, so label addition is codeword addition.
  BhMatrix matrix() const;

 private:
  FunctionalTable(LinearCode code, FieldPtr ext);

  LinearCode code_;
  FieldPtr ext_;
  const Embedding* embedding_ = nullptr;
  Vec beta_;
  std::vector<Codeword> fp_basis_;
  std::vector<std::vector<unsigned>> gram_;
  std::vector<Vec> theta_system_;
  std::optional<LexMinSolver> theta_solver_;
  std::optional<LexMinSolver> lambda_solver_;
};

FunctionalTable table_make(const LinearCode& code, const FieldPtr& ext);

unsigned f_eval(const FunctionalTable& table, Elem lambda, std::span<const Elem> word);
Vec theta(const FunctionalTable& table, Elem lambda);

/// Whether (v_1, ..., v_m) lies in the additive code D^Theta, the union over
/// (lambda_i) in D of the coset products Theta(lambda_1) x ... x Theta(lambda_m).
bool d_theta_member(const FunctionalTable& table, const LinearCode& outer,
                    const std::vector<Vec>& blocks);

/// F_p-basis of the common kernel of F_Lambda(c_1..c_m) = sum_i f_{lambda_i}(c_i)
/// over Lambda in D. Each element is the concatenation c_1 | ... | c_m.
std::vector<Vec> big_f_kernel(const FunctionalTable& table, const LinearCode& outer);

/// Drops coordinates on which every codeword vanishes, and rejects the zero
/// code and the full space with DegenerateD. Afterwards every coordinate takes
/// the value 1 on some codeword.
LinearCode validate_outer_code(const LinearCode& outer);

}  // namespace qbh
