// SPDX-License-Identifier: Apache-2.0
//
// pucodes: paraunitary complementary sequence toolkit
// Copyright (C) 2026 The pucodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pucodes {

enum class ErrorCode {
  kind_mismatch,
  size_mismatch,
  shape_mismatch,
  non_constant_diagonal,
  out_of_range,
  invalid_permutation,
  invalid_spec,
  anticausal_input,
  not_standard,
  non_unit_phase,
  overflow,
  parse_error,
  io_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kind_mismatch: return "kind mismatch";
    case ErrorCode::size_mismatch: return "size mismatch";
    case ErrorCode::shape_mismatch: return "shape mismatch";
    case ErrorCode::non_constant_diagonal: return "non-constant diagonal";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::invalid_permutation: return "invalid permutation";
    case ErrorCode::invalid_spec: return "invalid generator spec";
    case ErrorCode::anticausal_input: return "anticausal input";
    case ErrorCode::not_standard: return "not a standard delay plan";
    case ErrorCode::non_unit_phase: return "non-unit phase";
    case ErrorCode::overflow: return "integer overflow";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::io_error: return "io error";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

  /// Same code, message prefixed with `where` (a file name, a line).
  Error with_context(const std::string& where) const { return Error(code_, where + ": " + detail_); }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pucodes
