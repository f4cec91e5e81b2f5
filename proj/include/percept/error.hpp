/* Copyright 2026 The Percept Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace percept {

/// Failure categories raised by the library. Every throwing operation
/// documents which of these it can raise.
enum class ErrorCode {
  // pipeline
  kArityMismatch,
  kIndexOutOfRange,
  kNameNotFound,
  kNameAmbiguous,
  kUnknownProcessorType,
  kInvalidParam,
  kInvalidPacket,
  // boxes
  kLengthMismatch,
  kDegenerateBox,
  // image I/O
  kFileNotFound,
  kUnsupportedFormat,
  kCorruptHeader,
  // geometry
  kZeroNorm,
  kNotUnit,
  kNotARotation,
  kZeroAxis,
  kBehindCamera,
  kInsufficientPoints,
  kDegenerateConfiguration,
  // messages and datasets
  kUnknownMessageType,
  kSchemaViolation,
  kMissingClassHeader,
  kUnknownClassName,
  kMalformedLine,
  kShapeMismatch,
};

constexpr const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNameNotFound: return "NameNotFound";
    case ErrorCode::kNameAmbiguous: return "NameAmbiguous";
    case ErrorCode::kUnknownProcessorType: return "UnknownProcessorType";
    case ErrorCode::kInvalidParam: return "InvalidParam";
    case ErrorCode::kInvalidPacket: return "InvalidPacket";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateBox: return "DegenerateBox";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kCorruptHeader: return "CorruptHeader";
    case ErrorCode::kZeroNorm: return "ZeroNorm";
    case ErrorCode::kNotUnit: return "NotUnit";
    case ErrorCode::kNotARotation: return "NotARotation";
    case ErrorCode::kZeroAxis: return "ZeroAxis";
    case ErrorCode::kBehindCamera: return "BehindCamera";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
    case ErrorCode::kDegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::kUnknownMessageType: return "UnknownMessageType";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kMissingClassHeader: return "MissingClassHeader";
    case ErrorCode::kUnknownClassName: return "UnknownClassName";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
  }
  return "UnknownError";
}

/// Library-wide exception. what() is "<CodeName>: <message>"; message()
/// returns the bare text, which callers use when re-raising with context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace percept
