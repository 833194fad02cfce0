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


#include "quasimo/error.hpp"

namespace quasimo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::IdentityString: return "IdentityString";
    case ErrorCode::UnboundParameters: return "UnboundParameters";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::UnknownObservable: return "UnknownObservable";
    case ErrorCode::MissingObservable: return "MissingObservable";
    case ErrorCode::UnknownWorkflow: return "UnknownWorkflow";
    case ErrorCode::UnknownOptimizer: return "UnknownOptimizer";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::NoOptimizer: return "NoOptimizer";
    case ErrorCode::TooManyQubitsForQite: return "TooManyQubitsForQITE";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotASymmetry: return "NotASymmetry";
    case ErrorCode::SectorArityMismatch: return "SectorArityMismatch";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::ParseError,
            message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace quasimo
