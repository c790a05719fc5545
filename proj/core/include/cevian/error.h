// Copyright 2026 The Cevian Authors
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

#ifndef CEVIAN_ERROR_H_
#define CEVIAN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevian {

enum class ErrorCode {
  kSumViolation,
  kNegativeAngle,
  kNonFinite,
  kDegenerateTriangle,
  kDegenerateStart,
  kCevianFailure,
  kBudgetExceeded,
  kInvalidArgument,
  kParseError,
  kUsageError,
  kIoError,
};

// Stable machine-readable name, e.g. "SumViolation".
std::string_view ErrorName(ErrorCode code);

// All library failures are reported as cevian::Error. The what() string is a
// single line without the code name; use FormatError for the CLI form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// "error: <Name>: <message>"
std::string FormatError(const Error& e);

}  // namespace cevian

#endif  // CEVIAN_ERROR_H_
