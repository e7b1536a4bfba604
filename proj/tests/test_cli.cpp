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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbh/cli.hpp"

namespace {

const std::string kData = QBH_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qbh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qbh_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("construct, distance and verify on Shor") {
  const std::string stab = temp_path("shor.stab");
  const std::string c = kData + "/rep3_f2.code";
  auto r = run({"construct", "-c", c, "-d", c, "-o", stab});
  CHECK(r.code == 0);
  CHECK(r.out.find("N=9 K=1 delta=3") != std::string::npos);
  const std::string first = slurp(stab);
  CHECK(first.rfind("2 1 3 1 3 1 9 1 3\n", 0) == 0);
  // Byte-identical output on a rerun.
  REQUIRE(run({"construct", "-c", c, "-d", c, "-o", stab}).code == 0);
  CHECK(slurp(stab) == first);

  r = run({"distance", stab, "--brute"});
  CHECK(r.code == 0);
  CHECK(r.out == "theorem=3 brute=3 OK\n");
  CHECK(run({"distance", stab, "-c", c, "-d", c}).out == "theorem=3\n");

  r = run({"verify", stab, "--statevec"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify: OK") != std::string::npos);
  CHECK(run({"verify", stab, "-c", c, "-d", c}).code == 0);
  // The stabilizer does not come from these inputs.
  r = run({"verify", stab, "-c", kData + "/rep3_f3.code", "-d", kData + "/rep3_f3.code"});
  CHECK(r.code != 0);
}

TEST_CASE("verify rejects a tampered stabilizer") {
  const std::string stab = temp_path("tampered.stab");
  const std::string c = kData + "/rep2_f2.code";
  REQUIRE(run({"construct", "-c", c, "-d", c, "-o", stab}).code == 0);
  std::string text = slurp(stab);
  // Flip the first Z entry of the last generator so it anticommutes.
  const auto bar = text.rfind('|');
  text[bar + 2] = text[bar + 2] == '0' ? '1' : '0';
  std::ofstream(stab) << text;
  const auto r = run({"verify", stab});
  CHECK(r.code == 1);
  CHECK(r.out.find("verify: FAILED") != std::string::npos);
}

TEST_CASE("verify rejects a truncated generator list") {
  const std::string stab = temp_path("short.stab");
  std::ofstream(stab) << "2 1 3 1 3 1 9 1 3\n1 1 1 0 0 0 0 0 0 | 0 0 0 0 0 0 0 0 0\n";
  const auto r = run({"verify", stab});
  CHECK(r.code == 1);
  CHECK(r.out.find("verify: FAILED") != std::string::npos);
}

TEST_CASE("qutrit construct") {
  const std::string stab = temp_path("qutrit.stab");
  const std::string c = kData + "/rep3_f3.code";
  const auto r = run({"construct", "-c", c, "-d", c, "-o", stab});
  CHECK(r.code == 0);
  CHECK(r.out.find("N=9 K=1 delta=3") != std::string::npos);
  CHECK(run({"distance", stab, "--brute"}).out == "theorem=3 brute=3 OK\n");
}

TEST_CASE("bh subcommands") {
  auto r = run({"bh", "verify", kData + "/fourier2.bh"});
  CHECK(r.code == 0);
  CHECK(r.out == "BH(4,2): yes\n");
  CHECK(run({"bh", "verify", kData + "/not_bh.bh"}).code == 1);

  r = run({"bh", "equiv", kData + "/fourier2.bh", kData + "/fourier2_rowscrambled.bh"});
  CHECK(r.code == 0);
  CHECK(r.out == "permutation: 2 0 3 1\nshifts: 0 1 0 0\n");

  r = run({"bh", "fourier-check", kData + "/fourier8_colswap.bh"});
  CHECK(r.code == 1);
  CHECK(r.out.find("fourier-equivalent: no") != std::string::npos);
  CHECK(r.out.find("linear rows: no") != std::string::npos);
  CHECK(run({"bh", "fourier-check", kData + "/fourier2.bh"}).code == 0);
  CHECK(run({"bh", "fourier-check", kData + "/not_bh.bh"}).code == 2);

  r = run({"bh", "form", kData + "/hyperbolic3.form"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fourier-equivalent: yes") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"distance"}).code == 2);
  CHECK(run({"distance", kData + "/nope.stab"}).code == 2);
  const auto r = run({"construct", "-c", kData + "/rep3_f2.code", "-d", kData + "/rep3_f3.code", "-o",
                      temp_path("bad.stab")});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--budget", "0", "verify", kData + "/fourier2.bh"}).code == 2);
  CHECK(run({"bh", "transmogrify", kData + "/fourier2.bh"}).code == 2);
}

TEST_CASE("budget is honoured") {
  const std::string stab = temp_path("budget.stab");
  const std::string c = kData + "/rep3_f2.code";
  REQUIRE(run({"construct", "-c", c, "-d", c, "-o", stab}).code == 0);
  const auto r = run({"--budget", "100", "distance", stab, "--brute"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Budget") != std::string::npos);
}
