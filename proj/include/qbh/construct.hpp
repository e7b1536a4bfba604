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
#include <vector>

#include "qbh/error.hpp"
#include "qbh/functional.hpp"
#include "qbh/gf.hpp"
#include "qbh/lincode.hpp"
#include "qbh/pauli.hpp"

namespace qbh {

/// The classical data a code was assembled from.
struct Provenance {
  LinearCode inner;  // C over F_q
  LinearCode outer;  // D over F_{q^k}, after validation
  FunctionalTable table;
};

/// Stabilizer code [[N = nm, K = ks]]_q with phase-free generators
/// X(c_1..c_m) from the F_Lambda kernel followed by Z(d_1..d_m), d_i in C^perp.
class StabilizerCode {
 public:
  StabilizerCode(FieldPtr field, std::size_t n, std::size_t k, std::size_t m, std::size_t s,
                 std::vector<PauliElement> generators, std::optional<Provenance> provenance = std::nullopt);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t s() const { return s_; }
  std::size_t length() const { return n_ * m_; }
  std::size_t logical() const { return k_ * s_; }
  const std::vector<PauliElement>& generators() const { return generators_; }
  /// Generator rows flattened to F_p.
  std::vector<Vec> symplectic_matrix() const;

  const std::optional<Provenance>& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }
  std::optional<std::size_t> cached_distance() const { return delta_; }
  void set_distance(std::size_t d) { delta_ = d; }

 private:
  FieldPtr field_;
  std::size_t n_, k_, m_, s_;
  std::vector<PauliElement> generators_;
  std::optional<Provenance> provenance_;
  std::optional<std::size_t> delta_;
};

StabilizerCode build(const LinearCode& inner, const LinearCode& outer);

/// min over nonzero Lambda in D of sum_i (coset leader weight of theta(lambda_i) + C^perp).
std::size_t ell(const LinearCode& inner, const LinearCode& outer, const FunctionalTable& table,
                std::uint64_t budget = kDefaultBudget);

/// min{d(C), ell}; cached on the code.
std::size_t distance(StabilizerCode& code, std::uint64_t budget = kDefaultBudget);

/// F_p-basis of the symplectic centralizer built from C^m, (C^perp)^m and the
/// theta images of an F_p-basis of D.
std::vector<SymplecticVector> centralizer_basis(const StabilizerCode& code);

/// Minimum symplectic weight over centralizer minus S (or S minus 0 when they
/// coincide), by enumeration. The centralizer is recomputed from the generators
/// alone, so provenance is not needed.
std::size_t distance_bruteforce(const StabilizerCode& code, std::uint64_t budget = kDefaultBudget);

/// (symp_ip(psi(E), g))_g over the generators.
Vec syndrome(const StabilizerCode& code, const PauliElement& e);

/// psi(E) in the span of S, or E fails to commute with some generator.
bool detectable(const StabilizerCode& code, const PauliElement& e);

}  // namespace qbh
