// Copyright 2026 The careerfuzz Authors
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

#ifndef CAREERFUZZ_ERROR_H_
#define CAREERFUZZ_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace careerfuzz {

enum class ErrorCode {
  kScoreOutOfRange,
  kInvalidGrade,
  kInvalidMembershipFunction,
  kInvalidCategorySet,
  kUnknownPreset,
  kInvalidSampleRange,
  kInvalidProfile,
  kMissingSubject,
  kUnknownCategory,
  kEmptyRuleSet,
  kEmptyAssessmentList,
  kKindMismatch,
  kUnknownField,
  kDanglingReference,
  kMalformedDocument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. Validation results that
// are expected to contain several findings use Diagnostic lists instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity severity);

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;     // e.g. "WeightSumViolation"
  std::string message;
  // Index of the offending rule, relation pair or entity, when known.
  std::optional<size_t> item;

  bool operator==(const Diagnostic&) const = default;
};

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_ERROR_H_
