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

#include <iosfwd>
#include <string>

#include "qbh/bh.hpp"
#include "qbh/construct.hpp"
#include "qbh/gf.hpp"
#include "qbh/lincode.hpp"

namespace qbh {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   field:       "p t", then optionally the monic modulus, constant term first
//   code:        "p t n k", optional "modulus: c_0 ... c_t", then k rows of n
//                packed field elements
//   BH matrix:   "N p", N rows of N exponents, optional "rowlabels:" and
//                "collabels:" lines of N integers
//   form:        "p t", t rows of t entries, optional "scalar: a" (default 1)
//   stabilizer:  "p r n k m s N K delta" (delta may be '?'), optional
//                "modulus:" line, then one "a_1 ... a_N | b_1 ... b_N" per
//                generator

struct FormFile {
  BilinearForm form;
  unsigned scalar = 1;
};

FieldPtr read_field(std::istream& in);
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code);
BhMatrix read_bh(std::istream& in);
void write_bh(std::ostream& out, const BhMatrix& m);
FormFile read_form(std::istream& in);
StabilizerCode read_stabilizer(std::istream& in);
void write_stabilizer(std::ostream& out, const StabilizerCode& code);

FieldPtr load_field(const std::string& path);
LinearCode load_code(const std::string& path);
BhMatrix load_bh(const std::string& path);
FormFile load_form(const std::string& path);
StabilizerCode load_stabilizer(const std::string& path);
void save_stabilizer(const std::string& path, const StabilizerCode& code);

}  // namespace qbh
