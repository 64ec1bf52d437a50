// Copyright 2026 The radext Authors.
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

#ifndef RADEXT_ERROR_HPP
#define RADEXT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace radext {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  InvalidParameter,
  NoSuchRoot,
  CharDividesM,
  WrongCharacteristic,
  VariableMismatch,
  FieldMismatch,
  DivisionByZero,
  EvalDenominatorZero,
  UnboundVariable,
  NotSquare,
  IndexOutOfRange,
  TooLarge,
  VerificationFailed,
  SingularMooreMatrix,
  DegreeTooSmall,
  DuplicateNodes,
  Unsupported,
  FieldTooSmall,
  RetriesExhausted,
  ParseError,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NoSuchRoot: return "NoSuchRoot";
    case ErrorCode::CharDividesM: return "CharDividesM";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvalDenominatorZero: return "EvalDenominatorZero";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SingularMooreMatrix: return "SingularMooreMatrix";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable detail message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool condition, ErrorCode code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

}  // namespace radext

#endif  // RADEXT_ERROR_HPP
