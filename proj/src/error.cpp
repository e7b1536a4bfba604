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

#include "qbh/error.hpp"

namespace qbh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotBh: return "NotBh";
    case ErrorKind::LabelsNotGroup: return "LabelsNotGroup";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotACodeword: return "NotACodeword";
    case ErrorKind::DegenerateD: return "DegenerateD";
    case ErrorKind::DimensionBounds: return "DimensionBounds";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qbh
