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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbh {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  NoEmbedding,
  FieldTooLarge,
  LengthMismatch,
  ZeroCode,
  BudgetExceeded,
  NotBh,
  LabelsNotGroup,
  DegenerateForm,
  DimensionMismatch,
  NotACodeword,
  DegenerateD,
  DimensionBounds,
  InvalidArgument,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI) can branch on the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

/// Default cap on the number of objects any exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

}  // namespace qbh
