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

#include "qbh/functional.hpp"

#include <string>

#include "qbh/error.hpp"

namespace qbh {

namespace {

constexpr std::uint64_t kMaxMatrixOrder = std::uint64_t{1} << 12;

}  // namespace

FunctionalTable FunctionalTable::make(LinearCode code, FieldPtr ext) {
  return FunctionalTable(std::move(code), std::move(ext));
}

FunctionalTable::FunctionalTable(LinearCode code, FieldPtr ext)
    : code_(std::move(code)), ext_(std::move(ext)) {
  const Field& fq = code_.field();
  const Field& K = *ext_;
  const unsigned p = fq.characteristic();
  const unsigned r = fq.degree();
  const std::size_t k = code_.dimension();
  if (k == 0) fail(ErrorKind::DimensionMismatch, "code must have positive dimension");
  if (K.characteristic() != p || K.degree() != r * k) {
    fail(ErrorKind::DimensionMismatch, "extension field must have degree r*k = " + std::to_string(r * k));
  }
  embedding_ = &Embedding::make(code_.field_ptr(), ext_);
  const Field& fp = *Field::prime(p);
  const std::size_t dim = r * k;

  // Smallest gamma with {x^i gamma^j} an F_p-basis of F_{q^k}.
  auto span_rows = [&](Elem gamma) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < k; ++j) {
      const Elem gj = K.pow(gamma, j);
      for (unsigned i = 0; i < r; ++i) {
        const Elem e = K.mul((*embedding_)(fq.pow(fq.generator(), i)), gj);
        auto d = K.digits(e);
        rows.emplace_back(d.begin(), d.end());
      }
    }
    return rows;
  };
  bool found = false;
  for (Elem gamma = 1; gamma < K.size(); ++gamma) {
    if (rank(fp, span_rows(gamma), dim) == dim) {
      beta_.resize(k);
      for (std::size_t j = 0; j < k; ++j) beta_[j] = K.pow(gamma, j);
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorKind::DimensionMismatch, "no F_q-basis of the extension found");

  fp_basis_.reserve(dim);
  for (std::size_t j = 0; j < k; ++j) {
    for (unsigned i = 0; i < r; ++i) {
      fp_basis_.push_back(vec_scale(fq, fq.pow(fq.generator(), i), code_.generator()[j]));
    }
  }

  gram_.assign(dim, std::vector<unsigned>(dim, 0));
  for (std::size_t a = 0; a < dim; ++a) {
    const Elem xa = K.pow(K.generator(), a);
    for (std::size_t j = 0; j < k; ++j) {
      for (unsigned i = 0; i < r; ++i) {
        const Elem e = K.mul(K.mul(xa, (*embedding_)(fq.pow(fq.generator(), i))), beta_[j]);
        gram_[a][j * r + i] = K.trace(e);
      }
    }
  }

  // theta: unknowns are the F_p digits of x in F_q^n, most significant first
  // (coordinate 0 digit r-1, ..., coordinate 0 digit 0, coordinate 1 ...).
  const std::size_t n = code_.length();
  theta_system_.assign(dim, Vec(n * r, 0));
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t coord = 0; coord < n; ++coord) {
      for (unsigned i = 0; i < r; ++i) {
        const Elem e = fq.mul(fp_basis_[b][coord], fq.pow(fq.generator(), i));
        theta_system_[b][coord * r + (r - 1 - i)] = fq.trace(e);
      }
    }
  }
  theta_solver_.emplace(fp, theta_system_, n * r);

  // lambda from rho values: sum_a lambda_a G[a][b] = rho_b.
  std::vector<Vec> gt(dim, Vec(dim, 0));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) gt[b][a] = gram_[a][b];
  }
  lambda_solver_.emplace(fp, gt, dim);
  if (lambda_solver_->rank() != dim) fail(ErrorKind::DimensionMismatch, "trace pairing is degenerate");
}

Elem FunctionalTable::pack(std::span<const Elem> message) const {
  if (message.size() != beta_.size()) fail(ErrorKind::LengthMismatch, "message length differs from k");
  const Field& K = *ext_;
  Elem acc = 0;
  for (std::size_t j = 0; j < message.size(); ++j) {
    acc = K.add(acc, K.mul((*embedding_)(message[j]), beta_[j]));
  }
  return acc;
}

unsigned FunctionalTable::eval_message(Elem lambda, std::span<const Elem> message) const {
  return ext_->trace(ext_->mul(lambda, pack(message)));
}

unsigned FunctionalTable::eval(Elem lambda, std::span<const Elem> word) const {
  if (!code_.contains(word)) fail(ErrorKind::NotACodeword, "f_lambda is defined on codewords only");
  return eval_message(lambda, code_.message_of(word));
}

std::vector<unsigned> FunctionalTable::coordinates(std::span<const Elem> word) const {
  const Field& fq = code_.field();
  const unsigned r = fq.degree();
  const Vec msg = code_.message_of(word);
  std::vector<unsigned> coords(fp_dimension());
  for (std::size_t j = 0; j < msg.size(); ++j) {
    for (unsigned i = 0; i < r; ++i) coords[j * r + i] = fq.digit(msg[j], i);
  }
  return coords;
}

Codeword FunctionalTable::from_coordinates(std::span<const unsigned> coords) const {
  const Field& fq = code_.field();
  Codeword c(code_.length(), 0);
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b] == 0) continue;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fq.add(c[i], fq.scale(fp_basis_[b][i], coords[b]));
  }
  return c;
}

unsigned FunctionalTable::rho(std::span<const Elem> x, std::span<const Elem> word) const {
  return code_.field().trace(dot(code_.field(), x, word));
}

Vec FunctionalTable::theta(Elem lambda) const {
  const Field& fq = code_.field();
  const unsigned r = fq.degree();
  const std::size_t n = code_.length();
  const std::size_t dim = fp_dimension();
  const unsigned p = fq.characteristic();
  Vec rhs(dim, 0);
  for (std::size_t b = 0; b < dim; ++b) {
    unsigned acc = 0;
    for (std::size_t a = 0; a < dim; ++a) acc += ext_->digit(lambda, a) * gram_[a][b];
    rhs[b] = acc % p;
  }
  auto sol = theta_solver_->solve(rhs);
  // Non-degeneracy of the trace form makes the system consistent.
  if (!sol) fail(ErrorKind::DimensionMismatch, "theta system inconsistent");
  Vec x(n, 0);
  for (std::size_t coord = 0; coord < n; ++coord) {
    std::vector<unsigned> d(r);
    for (unsigned i = 0; i < r; ++i) d[i] = (*sol)[coord * r + (r - 1 - i)];
    x[coord] = fq.from_digits(d);
  }
  return x;
}

Elem FunctionalTable::theta_inverse(std::span<const Elem> x) const {
  if (x.size() != code_.length()) fail(ErrorKind::LengthMismatch, "vector length differs from code length");
  const std::size_t dim = fp_dimension();
  Vec rhs(dim);
  for (std::size_t b = 0; b < dim; ++b) rhs[b] = rho(x, fp_basis_[b]);
  auto sol = lambda_solver_->solve(rhs);
  std::vector<unsigned> digits(sol->begin(), sol->end());
  return ext_->from_digits(digits);
}

BhMatrix FunctionalTable::matrix() const {
  const std::uint64_t n = code_.size(kMaxMatrixOrder);
  const unsigned p = base().characteristic();
  std::vector<unsigned> e(n * n);
  std::vector<std::uint64_t> col_labels(n);
  std::vector<Vec> messages(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    messages[j] = code_.message(j);
    const auto coords = coordinates(code_.encode(messages[j]));
    std::uint64_t label = 0;
    for (std::size_t b = coords.size(); b-- > 0;) label = label * p + coords[b];
    col_labels[j] = label;
  }
  std::vector<std::uint64_t> row_labels(n);
  for (std::uint64_t lambda = 0; lambda < n; ++lambda) {
    row_labels[lambda] = lambda;
    for (std::uint64_t j = 0; j < n; ++j) {
      e[lambda * n + j] = eval_message(static_cast<Elem>(lambda), messages[j]);
    }
  }
  return BhMatrix(n, p, std::move(e), std::move(row_labels), std::move(col_labels));
}

FunctionalTable table_make(const LinearCode& code, const FieldPtr& ext) {
  return FunctionalTable::make(code, ext);
}

unsigned f_eval(const FunctionalTable& table, Elem lambda, std::span<const Elem> word) {
  return table.eval(lambda, word);
}

Vec theta(const FunctionalTable& table, Elem lambda) { return table.theta(lambda); }

bool d_theta_member(const FunctionalTable& table, const LinearCode& outer, const std::vector<Vec>& blocks) {
  if (blocks.size() != outer.length()) fail(ErrorKind::LengthMismatch, "need one block per coordinate of D");
  if (outer.field_ptr() != table.ext_ptr()) fail(ErrorKind::DimensionMismatch, "D must be over F_{q^k}");
  Vec lambdas(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) lambdas[i] = table.theta_inverse(blocks[i]);
  return outer.contains(lambdas);
}

std::vector<Vec> big_f_kernel(const FunctionalTable& table, const LinearCode& outer) {
  if (outer.field_ptr() != table.ext_ptr()) fail(ErrorKind::DimensionMismatch, "D must be over F_{q^k}");
  const Field& K = table.ext();
  const unsigned p = K.characteristic();
  const std::size_t dim = table.fp_dimension();
  const std::size_t m = outer.length();
  const std::size_t n = table.code().length();
  const auto& gram = table.gram();

  std::vector<Vec> equations;
  for (const auto& row : outer.generator()) {
    for (std::size_t a = 0; a < dim; ++a) {
      const Vec lam = vec_scale(K, K.pow(K.generator(), a), row);
      Vec eq(dim * m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t b = 0; b < dim; ++b) {
          unsigned acc = 0;
          for (std::size_t a2 = 0; a2 < dim; ++a2) acc += K.digit(lam[i], a2) * gram[a2][b];
          eq[i * dim + b] = acc % p;
        }
      }
      equations.push_back(std::move(eq));
    }
  }
  const Field& fp = *Field::prime(p);
  std::vector<Vec> null = nullspace(fp, equations, dim * m);
  std::vector<Vec> out;
  out.reserve(null.size());
  for (const auto& v : null) {
    Vec tuple(n * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<unsigned> coords(v.begin() + i * dim, v.begin() + (i + 1) * dim);
      const Codeword c = table.from_coordinates(coords);
      std::copy(c.begin(), c.end(), tuple.begin() + i * n);
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

LinearCode validate_outer_code(const LinearCode& outer) {
  if (outer.is_zero()) fail(ErrorKind::DegenerateD, "D is the zero code");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < outer.length(); ++i) {
    for (const auto& row : outer.generator()) {
      if (row[i] != 0) {
        keep.push_back(i);
        break;
      }
    }
  }
  std::vector<Vec> rows;
  for (const auto& row : outer.generator()) {
    Vec r;
    for (auto i : keep) r.push_back(row[i]);
    rows.push_back(std::move(r));
  }
  LinearCode projected = LinearCode::make(outer.field_ptr(), rows);
  if (projected.dimension() == projected.length()) fail(ErrorKind::DegenerateD, "D is the full space");
  return projected;
}

}  // namespace qbh
