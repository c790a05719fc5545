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

#include "cevian/error.h"

#include <string>

namespace cevian {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSumViolation:
      return "SumViolation";
    case ErrorCode::kNegativeAngle:
      return "NegativeAngle";
    case ErrorCode::kNonFinite:
      return "NonFinite";
    case ErrorCode::kDegenerateTriangle:
      return "DegenerateTriangle";
    case ErrorCode::kDegenerateStart:
      return "DegenerateStart";
    case ErrorCode::kCevianFailure:
      return "CevianFailure";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kUsageError:
      return "UsageError";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

std::string FormatError(const Error& e) {
  std::string line = "error: ";
  line += ErrorName(e.code());
  line += ": ";
  for (char c : std::string_view(e.what())) line += (c == '\n' ? ' ' : c);
  return line;
}

}  // namespace cevian
