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

#include "qbh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include "qbh/bh.hpp"
#include "qbh/construct.hpp"
#include "qbh/io.hpp"
#include "qbh/linalg.hpp"
#include "qbh/statevec.hpp"

namespace qbh::cli {

namespace {

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) fail(ErrorKind::Io, "no such file: " + path);
}

std::uint64_t int_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

bool same_row_space(const StabilizerCode& a, const StabilizerCode& b) {
  if (a.field_ptr() != b.field_ptr() || a.length() != b.length()) return false;
  const Field& fp = *Field::prime(a.field().characteristic());
  const std::size_t width = 2 * a.length() * a.field().degree();
  return rref(fp, a.symplectic_matrix(), width).rows == rref(fp, b.symplectic_matrix(), width).rows;
}

// Rebuilds S from C and D and checks it matches the file.
std::optional<StabilizerCode> rebuild(const StabilizerCode& file, const std::string& c_path,
                                      const std::string& d_path, std::ostream& out) {
  if (c_path.empty() != d_path.empty()) fail(ErrorKind::InvalidArgument, "-c and -d must be given together");
  if (c_path.empty()) return std::nullopt;
  require_file(c_path);
  require_file(d_path);
  StabilizerCode built = build(load_code(c_path), load_code(d_path));
  if (!same_row_space(file, built)) {
    out << "stabilizer does not match the code built from " << c_path << " and " << d_path << '\n';
    return std::nullopt;
  }
  return built;
}

struct Check {
  std::ostream& out;
  bool ok = true;

  void operator()(const std::string& name, bool pass, const std::string& detail = "") {
    out << name << ": " << (pass ? "ok" : "FAILED");
    if (!detail.empty()) out << " (" << detail << ')';
    out << '\n';
    ok = ok && pass;
  }
};

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  require_file(cfg.inputs.at(0));
  require_file(cfg.inputs.at(1));
  StabilizerCode code = build(load_code(cfg.inputs[0]), load_code(cfg.inputs[1]));
  const std::size_t delta = distance(code, cfg.budget);
  save_stabilizer(cfg.output, code);
  out << "N=" << code.length() << " K=" << code.logical() << " delta=" << delta << '\n';
  if (cfg.verbosity > 0) {
    for (const auto& g : code.generators()) out << render(g) << '\n';
  }
  return kOk;
}

int cmd_distance(const RunConfig& cfg, const std::string& c_path, const std::string& d_path, bool brute,
                 std::ostream& out) {
  require_file(cfg.inputs.at(0));
  StabilizerCode code = load_stabilizer(cfg.inputs[0]);
  std::size_t theorem = 0;
  if (!c_path.empty() || !d_path.empty()) {
    auto built = rebuild(code, c_path, d_path, out);
    if (!built) return kVerifyFailed;
    theorem = distance(*built, cfg.budget);
  } else if (auto d = code.cached_distance()) {
    theorem = *d;
  } else {
    fail(ErrorKind::InvalidArgument, "file has no delta; pass -c and -d");
  }
  out << "theorem=" << theorem;
  int rc = kOk;
  if (brute) {
    const std::size_t b = distance_bruteforce(code, cfg.budget);
    out << " brute=" << b << (b == theorem ? " OK" : " MISMATCH");
    if (b != theorem) rc = kVerifyFailed;
  }
  out << '\n';
  return rc;
}

int cmd_verify(const RunConfig& cfg, const std::string& c_path, const std::string& d_path, bool statevec,
               std::ostream& out) {
  require_file(cfg.inputs.at(0));
  StabilizerCode code = load_stabilizer(cfg.inputs[0]);
  const Field& f = code.field();
  const auto& gens = code.generators();
  Check check{out};

  bool commute = true;
  for (std::size_t i = 0; i < gens.size() && commute; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && commute; ++j) commute = commutes(gens[i], gens[j]);
  }
  check("commutation", commute);
  const Field& fp = *Field::prime(f.characteristic());
  const std::size_t rk = rank(fp, code.symplectic_matrix(), 2 * code.length() * f.degree());
  const std::size_t expected = f.degree() * (code.length() - code.logical());
  check("rank", rk == gens.size() && rk == expected,
        std::to_string(rk) + " of " + std::to_string(gens.size()) + ", expected " + std::to_string(expected));
  check("phase-free", std::all_of(gens.begin(), gens.end(), [](const PauliElement& g) { return g.phase() == 0; }));

  std::optional<StabilizerCode> built;
  if (!c_path.empty() || !d_path.empty()) {
    built = rebuild(code, c_path, d_path, out);
    check("matches C and D", built.has_value());
  }
  if (statevec) {
    const std::uint64_t want = int_pow(f.size(), code.logical());
    const std::size_t fd = fix_dim(code, cfg.budget);
    check("fix dimension", fd == want, std::to_string(fd) + " vs q^K = " + std::to_string(want));
    if (built) {
      const auto& prov = *built->provenance();
      const auto states = code_states(prov.table, prov.outer, cfg.budget);
      bool fixed = true;
      for (const auto& v : states) {
        for (const auto& g : gens) fixed = fixed && apply(g, v) == v;
      }
      check("code states fixed", fixed);
      bool orthogonal = true;
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) orthogonal = orthogonal && inner(states[i], states[j]).is_zero();
      }
      check("Q = fix(S)", orthogonal && states.size() == want && fd == want);
    }
  }
  out << (check.ok ? "verify: OK" : "verify: FAILED") << '\n';
  return check.ok ? kOk : kVerifyFailed;
}

void print_equivalence(std::ostream& out, const RowEquivalence& eq) {
  out << "permutation:";
  for (auto i : eq.permutation) out << ' ' << i;
  out << "\nshifts:";
  for (auto s : eq.shifts) out << ' ' << s;
  out << '\n';
}

unsigned log_order(const BhMatrix& m) {
  unsigned t = 0;
  std::uint64_t size = 1;
  while (size < m.order()) {
    size *= m.modulus();
    ++t;
  }
  if (size != m.order()) fail(ErrorKind::InvalidArgument, "order is not a power of p");
  return t;
}

int cmd_bh(const std::string& action, const RunConfig& cfg, std::ostream& out) {
  for (const auto& path : cfg.inputs) require_file(path);
  if (action == "verify") {
    BhMatrix m = load_bh(cfg.inputs.at(0));
    const bool ok = bh_verify(m);
    out << "BH(" << m.order() << ',' << m.modulus() << "): " << (ok ? "yes" : "no") << '\n';
    return ok ? kOk : kVerifyFailed;
  }
  if (action == "equiv") {
    if (cfg.inputs.size() != 2) fail(ErrorKind::InvalidArgument, "bh equiv needs two matrices");
    const BhMatrix a = load_bh(cfg.inputs[0]);
    const BhMatrix b = load_bh(cfg.inputs[1]);
    auto eq = row_equivalence(a, b);
    if (!eq) {
      out << "not row-equivalent\n";
      return kVerifyFailed;
    }
    print_equivalence(out, *eq);
    return kOk;
  }
  if (action == "fourier-check") {
    BhMatrix m = load_bh(cfg.inputs.at(0));
    if (!bh_verify(m)) fail(ErrorKind::NotBh, "input is not a BH matrix");
    const BhMatrix fourier = kron_fourier(m.modulus(), log_order(m));
    auto eq = row_equivalence(fourier, m);
    out << "fourier-equivalent: " << (eq ? "yes" : "no") << '\n';
    out << "linear rows: " << (linear_rows_check(m) ? "yes" : "no") << '\n';
    if (eq) print_equivalence(out, *eq);
    return eq ? kOk : kVerifyFailed;
  }
  if (action == "form") {
    const FormFile ff = load_form(cfg.inputs.at(0));
    const BhMatrix m = form_matrix(ff.form, ff.scalar);
    const auto eq = row_equivalence(kron_fourier(m.modulus(), static_cast<unsigned>(ff.form.dimension())), m);
    write_bh(out, m);
    out << "fourier-equivalent: " << (eq ? "yes" : "no") << '\n';
    return eq ? kOk : kVerifyFailed;
  }
  fail(ErrorKind::InvalidArgument, "unknown bh action '" + action + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum stabilizer codes from classical codes and Butson-Hadamard matrices", "qbh"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "Enumeration budget")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  std::string c_path, d_path, bh_action;
  bool brute = false, statevec = false;

  auto* construct = app.add_subcommand("construct", "Build S from C and D and write the stabilizer file");
  construct->add_option("-c", c_path, "Code C over F_q")->required();
  construct->add_option("-d", d_path, "Code D over F_{q^k}")->required();
  construct->add_option("-o", cfg.output, "Output stabilizer file")->required();

  auto* dist = app.add_subcommand("distance", "Print the distance of a stabilizer file");
  dist->add_option("stab", cfg.inputs, "Stabilizer file")->required()->expected(1);
  dist->add_option("-c", c_path, "Code C the file was built from");
  dist->add_option("-d", d_path, "Code D the file was built from");
  dist->add_flag("--brute", brute, "Also enumerate the centralizer");

  auto* verify = app.add_subcommand("verify", "Check a stabilizer file");
  verify->add_option("stab", cfg.inputs, "Stabilizer file")->required()->expected(1);
  verify->add_option("-c", c_path, "Code C the file was built from");
  verify->add_option("-d", d_path, "Code D the file was built from");
  verify->add_flag("--statevec", statevec, "State-vector checks");

  auto* bh = app.add_subcommand("bh", "Butson-Hadamard matrix utilities");
  bh->add_option("action", bh_action, "verify | equiv | fourier-check | form")
      ->required()
      ->check(CLI::IsMember({"verify", "equiv", "fourier-check", "form"}));
  bh->add_option("files", cfg.inputs, "Matrix or form files")->required()->expected(1, 2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*construct) {
      cfg.subcommand = "construct";
      cfg.inputs = {c_path, d_path};
      return cmd_construct(cfg, out);
    }
    if (*dist) {
      cfg.subcommand = "distance";
      return cmd_distance(cfg, c_path, d_path, brute, out);
    }
    if (*verify) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, c_path, d_path, statevec, out);
    }
    cfg.subcommand = "bh";
    return cmd_bh(bh_action, cfg, out);
  } catch (const Error& e) {
    err << "qbh: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "qbh: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace qbh::cli
