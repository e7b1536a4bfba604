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

#include "qbh/lincode.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qbh/linalg.hpp"

namespace qbh {

LinearCode LinearCode::make(FieldPtr field, const std::vector<Vec>& rows) {
  if (rows.empty()) fail(ErrorKind::InvalidArgument, "a code needs at least one generator row");
  const std::size_t n = rows.front().size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "code length must be positive");
  for (const auto& row : rows) {
    if (row.size() != n) fail(ErrorKind::LengthMismatch, "generator rows have different lengths");
    for (Elem x : row) {
      if (x >= field->size()) fail(ErrorKind::InvalidArgument, "entry outside the field");
    }
  }
  Echelon e = rref(*field, rows, n);
  if (e.rank() == 0) fail(ErrorKind::ZeroCode, "all generator rows are zero");
  LinearCode code(std::move(field), n);
  code.generator_ = std::move(e.rows);
  code.pivots_ = std::move(e.pivots);
  return code;
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t length) {
  return LinearCode(std::move(field), length);
}

std::uint64_t LinearCode::size(std::uint64_t budget) const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (s > budget / field_->size()) {
      fail(ErrorKind::BudgetExceeded, "code has more than " + std::to_string(budget) + " codewords");
    }
    s *= field_->size();
  }
  if (s > budget) fail(ErrorKind::BudgetExceeded, "code has more than " + std::to_string(budget) + " codewords");
  return s;
}

Codeword LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != dimension()) fail(ErrorKind::LengthMismatch, "message length differs from dimension");
  Codeword c(length_, 0);
  for (std::size_t j = 0; j < message.size(); ++j) {
    if (message[j] == 0) continue;
    for (std::size_t i = 0; i < length_; ++i) {
      c[i] = field_->add(c[i], field_->mul(message[j], generator_[j][i]));
    }
  }
  return c;
}

Vec LinearCode::message_of(std::span<const Elem> word) const {
  if (word.size() != length_) fail(ErrorKind::LengthMismatch, "word length differs from code length");
  Vec msg(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) msg[j] = word[pivots_[j]];
  return msg;
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length_) return false;
  const Codeword c = encode(message_of(word));
  return std::equal(c.begin(), c.end(), word.begin());
}

Vec LinearCode::message(std::uint64_t index) const {
  Vec msg(dimension(), 0);
  for (std::size_t j = dimension(); j-- > 0;) {
    msg[j] = static_cast<Elem>(index % field_->size());
    index /= field_->size();
  }
  return msg;
}

std::uint64_t LinearCode::message_index(std::span<const Elem> message) const {
  std::uint64_t idx = 0;
  for (Elem x : message) idx = idx * field_->size() + x;
  return idx;
}

std::vector<Codeword> LinearCode::codewords(std::uint64_t budget) const {
  const std::uint64_t count = size(budget);
  std::vector<Codeword> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(codeword(i));
  return out;
}

LinearCode code_make(FieldPtr field, const std::vector<Vec>& rows) {
  return LinearCode::make(std::move(field), rows);
}

LinearCode dual(const LinearCode& code) {
  std::vector<Vec> basis = nullspace(code.field(), code.generator(), code.length());
  if (basis.empty()) return LinearCode::zero(code.field_ptr(), code.length());
  return LinearCode::make(code.field_ptr(), basis);
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

namespace {

// Visits v + every codeword, updating the running word incrementally as the
// message odometer advances (least significant symbol = last message entry).
template <class Visit>
void for_each_translate(const LinearCode& code, Vec word, std::uint64_t budget, Visit&& visit) {
  const Field& f = code.field();
  const std::uint64_t count = code.size(budget);
  const std::size_t k = code.dimension();
  Vec msg(k, 0);
  visit(word);
  for (std::uint64_t step = 1; step < count; ++step) {
    for (std::size_t j = k; j-- > 0;) {
      const Elem old = msg[j];
      const Elem next = (old + 1 == f.size()) ? 0 : old + 1;
      msg[j] = next;
      const Elem delta = f.sub(next, old);
      const auto& g = code.generator()[j];
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (g[i] != 0) word[i] = f.add(word[i], f.mul(delta, g[i]));
      }
      if (next != 0) break;
    }
    visit(word);
  }
}

}  // namespace

std::size_t min_distance(const LinearCode& code, std::uint64_t budget) {
  if (code.is_zero()) fail(ErrorKind::ZeroCode, "minimum distance of the zero code");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool first = true;
  for_each_translate(code, Vec(code.length(), 0), budget, [&](const Vec& w) {
    if (first) {
      first = false;
      return;
    }
    best = std::min(best, hamming_weight(w));
  });
  return best;
}

std::size_t coset_leader_weight(const LinearCode& code, std::span<const Elem> v, std::uint64_t budget) {
  if (v.size() != code.length()) fail(ErrorKind::LengthMismatch, "vector length differs from code length");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_translate(code, Vec(v.begin(), v.end()), budget,
                     [&](const Vec& w) { best = std::min(best, hamming_weight(w)); });
  return best;
}

}  // namespace qbh
