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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbh/bh.hpp"
#include "qbh/construct.hpp"
#include "qbh/error.hpp"
#include "qbh/functional.hpp"
#include "qbh/gf.hpp"
#include "qbh/pauli.hpp"

namespace qbh {

/// Element of Z[zeta_P] for P = phase_modulus(p), as integer coefficients of
/// 1, zeta, ..., zeta^{P-1}. Canonical form: for odd p the last coefficient is
/// 0 (reduced by 1 + zeta + ... + zeta^{p-1} = 0); for P = 4 the coefficients
/// of zeta^2 and zeta^3 are 0 (reduced by i^2 = -1).
class CycAmp {
 public:
  explicit CycAmp(unsigned modulus = 4);
  static CycAmp root(unsigned modulus, std::uint64_t exponent);
  static CycAmp integer(unsigned modulus, long long value);

  unsigned modulus() const { return static_cast<unsigned>(c_.size()); }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;
  CycAmp conj() const;
  /// e with value zeta^e, if the value is a root of unity.
  std::optional<unsigned> root_exponent() const;

  CycAmp& operator+=(const CycAmp& o);
  friend CycAmp operator+(CycAmp a, const CycAmp& b) { return a += b; }
  friend CycAmp operator-(const CycAmp& a, const CycAmp& b);
  friend CycAmp operator-(const CycAmp& a);
  friend CycAmp operator*(const CycAmp& a, const CycAmp& b);
  friend bool operator==(const CycAmp&, const CycAmp&) = default;

 private:
  void canonicalize();
  std::vector<long long> c_;
};

/// Sparse state over F_q^N. Basis labels pack x as sum_i x_i q^{N-1-i}. The
/// represented vector is q^{-scale/2} * sum_x amp(x) |x>.
class StateVector {
 public:
  StateVector(FieldPtr field, std::size_t length, unsigned scale = 0);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return length_; }
  unsigned scale() const { return scale_; }
  unsigned modulus() const { return phase_modulus(field_->characteristic()); }
  const std::map<std::uint64_t, CycAmp>& amplitudes() const { return amps_; }
  CycAmp at(std::uint64_t label) const;
  void add(std::uint64_t label, const CycAmp& amp);

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.field_ == b.field_ && a.length_ == b.length_ && a.scale_ == b.scale_ && a.amps_ == b.amps_;
  }

 private:
  FieldPtr field_;
  std::size_t length_;
  unsigned scale_;
  std::map<std::uint64_t, CycAmp> amps_;
};

std::uint64_t label_of(const Field& f, std::span<const Elem> x);
Vec label_vector(const Field& f, std::size_t length, std::uint64_t label);

StateVector basis_state(const FieldPtr& field, std::span<const Elem> x);

/// phi_lambda = q^{-k/2} sum_{c in C} omega^{f_lambda(c)} |c>.
StateVector phi(const FunctionalTable& table, Elem lambda, std::uint64_t budget = kDefaultBudget);
/// The same from an explicit BH matrix: column j is the codeword whose F_p
/// coordinates are packed in its column label.
StateVector phi(const FunctionalTable& table, const BhMatrix& h, std::size_t row);

/// phi_{lambda_1} x ... x phi_{lambda_m}; Lambda must lie in D.
StateVector big_phi(const FunctionalTable& table, const LinearCode& outer, std::span<const Elem> lambda,
                    std::uint64_t budget = kDefaultBudget);
/// Rows of h are picked by row label (row index when unlabeled).
StateVector big_phi(const FunctionalTable& table, const BhMatrix& h, std::span<const Elem> lambda,
                    std::uint64_t budget = kDefaultBudget);

/// Phi_Lambda for every Lambda in D, in codeword order.
std::vector<StateVector> code_states(const FunctionalTable& table, const LinearCode& outer,
                                     std::uint64_t budget = kDefaultBudget);
std::vector<StateVector> code_states(const FunctionalTable& table, const BhMatrix& h, const LinearCode& outer,
                                     std::uint64_t budget = kDefaultBudget);

StateVector tensor(const StateVector& a, const StateVector& b, std::uint64_t budget = kDefaultBudget);

/// sum over c_1 + ... + c_m = c of |c_1 ... c_m>, one state per c in C.
std::vector<StateVector> equal_sum_states(const LinearCode& code, std::size_t m,
                                          std::uint64_t budget = kDefaultBudget);

StateVector apply(const PauliElement& e, const StateVector& v);

/// sum_x conj(a(x)) b(x), without the scale factors.
CycAmp inner(const StateVector& a, const StateVector& b);
/// Whether sum_x |amp(x)|^2 = q^scale exactly.
bool has_unit_norm(const StateVector& v);

/// Rank over Q(zeta) of the amplitude matrix.
std::size_t span_rank(const std::vector<StateVector>& states, std::uint64_t budget = kDefaultBudget);
bool span_equal(const std::vector<StateVector>& a, const std::vector<StateVector>& b,
                std::uint64_t budget = kDefaultBudget);

/// Every omega^c X(a) Z(b) fixing each given state, by enumeration.
std::vector<PauliElement> stab_of_span(const std::vector<StateVector>& states,
                                       std::uint64_t budget = kDefaultBudget);

/// dim fix(S) by phase propagation along orbits of the generators.
std::size_t fix_dim(const StabilizerCode& code, std::uint64_t budget = kDefaultBudget);

/// Exponents e_r with b_r = zeta^{e_r} a_r for every r, if they exist.
std::optional<std::vector<unsigned>> factor_phase_shifts(const std::vector<StateVector>& a,
                                                         const std::vector<StateVector>& b);

/// "label : c_0 ... c_{P-1} scale" per stored amplitude.
std::string dump(const StateVector& v);

}  // namespace qbh
