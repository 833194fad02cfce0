// Copyright 2026 The QuaSiMo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasimo {

enum class ErrorCode {
  IndexTooLarge,
  TooManyQubits,
  ParseError,
  ArityMismatch,
  WidthMismatch,
  IdentityString,
  UnboundParameters,
  NonHermitian,
  BudgetTooSmall,
  UnknownObservable,
  MissingObservable,
  UnknownWorkflow,
  UnknownOptimizer,
  BadConfig,
  NoOptimizer,
  TooManyQubitsForQite,
  SingularSystem,
  NotASymmetry,
  SectorArityMismatch,
  MissingKey,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure mode carries a stable code so callers
/// (and the CLI's exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  /// Zero-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace quasimo
