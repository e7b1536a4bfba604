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

#include "qbh/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "qbh/error.hpp"

namespace qbh {

namespace {

// Non-empty, non-comment lines with surrounding whitespace kept.
class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.push_back(line.substr(first));
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const std::string& peek() const { return lines_.at(pos_); }
  std::string next(const char* what) {
    if (done()) fail(ErrorKind::Parse, std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }
  /// If the next line starts with tag, consume it and return the remainder.
  std::optional<std::string> tagged(const std::string& tag) {
    if (done() || peek().rfind(tag, 0) != 0) return std::nullopt;
    return next(tag.c_str()).substr(tag.size());
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::vector<unsigned long long> numbers(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<unsigned long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (tok.front() == '-') throw std::invalid_argument(tok);
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) fail(ErrorKind::Parse, std::string("bad integer '") + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

std::vector<unsigned long long> numbers(const std::string& line, std::size_t count, const char* what) {
  auto v = numbers(line, what);
  if (v.size() != count) {
    fail(ErrorKind::Parse, std::string(what) + ": expected " + std::to_string(count) + " integers, got " +
                               std::to_string(v.size()));
  }
  return v;
}

std::optional<std::vector<unsigned>> modulus_line(LineReader& lines) {
  auto rest = lines.tagged("modulus:");
  if (!rest) return std::nullopt;
  std::vector<unsigned> mod;
  for (auto v : numbers(*rest, "modulus")) mod.push_back(static_cast<unsigned>(v));
  return mod;
}

Vec elements(const std::string& line, std::size_t count, const Field& f, const char* what) {
  Vec out;
  for (auto v : numbers(line, count, what)) {
    if (v >= f.size()) fail(ErrorKind::Parse, std::string(what) + ": element " + std::to_string(v) + " not in F_" +
                                                  std::to_string(f.size()));
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

void write_modulus(std::ostream& out, const Field& f) {
  if (f.degree() == 1 || f.modulus() == Field::make(f.characteristic(), f.degree())->modulus()) return;
  out << "modulus:";
  for (unsigned c : f.modulus()) out << ' ' << c;
  out << '\n';
}

template <typename F>
auto with_file(const std::string& path, F&& f) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  return f(in);
}

}  // namespace

FieldPtr read_field(std::istream& in) {
  LineReader lines(in);
  const auto head = numbers(lines.next("'p t'"), 2, "field header");
  std::optional<std::vector<unsigned>> mod;
  if (!lines.done()) {
    mod.emplace();
    for (auto v : numbers(lines.next("modulus"), "modulus")) mod->push_back(static_cast<unsigned>(v));
  }
  return Field::make(static_cast<unsigned>(head[0]), static_cast<unsigned>(head[1]), mod);
}

LinearCode read_code(std::istream& in) {
  LineReader lines(in);
  const auto head = numbers(lines.next("'p t n k'"), 4, "code header");
  const auto mod = modulus_line(lines);
  const FieldPtr f = Field::make(static_cast<unsigned>(head[0]), static_cast<unsigned>(head[1]), mod);
  std::vector<Vec> rows;
  for (unsigned long long i = 0; i < head[3]; ++i) rows.push_back(elements(lines.next("code row"), head[2], *f, "code row"));
  if (!lines.done()) fail(ErrorKind::Parse, "trailing content after " + std::to_string(head[3]) + " code rows");
  if (rows.empty()) fail(ErrorKind::ZeroCode, "code file has no rows");
  return LinearCode::make(f, rows);
}

void write_code(std::ostream& out, const LinearCode& code) {
  const Field& f = code.field();
  out << f.characteristic() << ' ' << f.degree() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  write_modulus(out, f);
  for (const auto& row : code.generator()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

BhMatrix read_bh(std::istream& in) {
  LineReader lines(in);
  const auto head = numbers(lines.next("'N p'"), 2, "BH header");
  const std::size_t n = head[0];
  std::vector<unsigned> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto v : numbers(lines.next("matrix row"), n, "matrix row")) e.push_back(static_cast<unsigned>(v));
  }
  std::optional<std::vector<std::uint64_t>> rows, cols;
  while (!lines.done()) {
    if (auto r = lines.tagged("rowlabels:")) {
      auto v = numbers(*r, n, "rowlabels");
      rows.emplace(v.begin(), v.end());
    } else if (auto c = lines.tagged("collabels:")) {
      auto v = numbers(*c, n, "collabels");
      cols.emplace(v.begin(), v.end());
    } else {
      fail(ErrorKind::Parse, "unexpected line '" + lines.peek() + "'");
    }
  }
  return BhMatrix(n, static_cast<unsigned>(head[1]), std::move(e), std::move(rows), std::move(cols));
}

void write_bh(std::ostream& out, const BhMatrix& m) {
  out << m.order() << ' ' << m.modulus() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  auto labels = [&](const char* tag, const std::vector<std::uint64_t>& v) {
    out << tag;
    for (auto x : v) out << ' ' << x;
    out << '\n';
  };
  if (m.row_labels()) labels("rowlabels:", *m.row_labels());
  if (m.col_labels()) labels("collabels:", *m.col_labels());
}

FormFile read_form(std::istream& in) {
  LineReader lines(in);
  const auto head = numbers(lines.next("'p t'"), 2, "form header");
  std::vector<std::vector<unsigned>> gram;
  for (unsigned long long i = 0; i < head[1]; ++i) {
    std::vector<unsigned> row;
    for (auto v : numbers(lines.next("Gram row"), head[1], "Gram row")) row.push_back(static_cast<unsigned>(v % head[0]));
    gram.push_back(std::move(row));
  }
  unsigned scalar = 1;
  if (auto s = lines.tagged("scalar:")) scalar = static_cast<unsigned>(numbers(*s, 1, "scalar")[0]);
  if (!lines.done()) fail(ErrorKind::Parse, "unexpected line '" + lines.peek() + "'");
  return FormFile{BilinearForm(static_cast<unsigned>(head[0]), std::move(gram)), scalar};
}

StabilizerCode read_stabilizer(std::istream& in) {
  LineReader lines(in);
  std::istringstream head(lines.next("stabilizer header"));
  std::vector<unsigned long long> h;
  std::string tok;
  std::optional<std::size_t> delta;
  while (head >> tok) {
    if (h.size() == 8) {
      if (tok != "?") delta = numbers(tok, 1, "delta")[0];
      h.push_back(0);
    } else {
      h.push_back(numbers(tok, 1, "stabilizer header")[0]);
    }
  }
  if (h.size() != 9) fail(ErrorKind::Parse, "stabilizer header needs 'p r n k m s N K delta'");
  const std::size_t n = h[2], k = h[3], m = h[4], s = h[5];
  if (h[6] != n * m || h[7] != k * s) fail(ErrorKind::Parse, "header N, K disagree with n*m, k*s");
  const auto mod = modulus_line(lines);
  const FieldPtr f = Field::make(static_cast<unsigned>(h[0]), static_cast<unsigned>(h[1]), mod);
  std::vector<PauliElement> gens;
  while (!lines.done()) {
    const std::string line = lines.next("generator");
    const auto bar = line.find('|');
    if (bar == std::string::npos) fail(ErrorKind::Parse, "generator line needs 'a-part | b-part'");
    Vec a = elements(line.substr(0, bar), n * m, *f, "generator a-part");
    Vec b = elements(line.substr(bar + 1), n * m, *f, "generator b-part");
    gens.emplace_back(f, 0, std::move(a), std::move(b));
  }
  StabilizerCode code(f, n, k, m, s, std::move(gens));
  if (delta) code.set_distance(*delta);
  return code;
}

void write_stabilizer(std::ostream& out, const StabilizerCode& code) {
  const Field& f = code.field();
  out << f.characteristic() << ' ' << f.degree() << ' ' << code.n() << ' ' << code.k() << ' ' << code.m() << ' '
      << code.s() << ' ' << code.length() << ' ' << code.logical() << ' ';
  if (auto d = code.cached_distance()) {
    out << *d;
  } else {
    out << '?';
  }
  out << '\n';
  write_modulus(out, f);
  for (const auto& g : code.generators()) {
    for (std::size_t i = 0; i < g.length(); ++i) out << (i ? " " : "") << g.x()[i];
    out << " |";
    for (std::size_t i = 0; i < g.length(); ++i) out << ' ' << g.z()[i];
    out << '\n';
  }
}

FieldPtr load_field(const std::string& path) { return with_file(path, [](std::istream& in) { return read_field(in); }); }
LinearCode load_code(const std::string& path) { return with_file(path, [](std::istream& in) { return read_code(in); }); }
BhMatrix load_bh(const std::string& path) { return with_file(path, [](std::istream& in) { return read_bh(in); }); }
FormFile load_form(const std::string& path) { return with_file(path, [](std::istream& in) { return read_form(in); }); }
StabilizerCode load_stabilizer(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_stabilizer(in); });
}

void save_stabilizer(const std::string& path, const StabilizerCode& code) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write " + path);
  write_stabilizer(out, code);
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

}  // namespace qbh
