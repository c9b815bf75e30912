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

#include "careerfuzz/text.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "careerfuzz/error.h"

namespace careerfuzz {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::kInvalidGrade: return "InvalidGrade";
    case ErrorCode::kInvalidMembershipFunction: return "InvalidMembershipFunction";
    case ErrorCode::kInvalidCategorySet: return "InvalidCategorySet";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kInvalidSampleRange: return "InvalidSampleRange";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kMissingSubject: return "MissingSubject";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kEmptyRuleSet: return "EmptyRuleSet";
    case ErrorCode::kEmptyAssessmentList: return "EmptyAssessmentList";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kUnknownField: return "UnknownField";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string NormalizeKey(std::string_view text) {
  std::string out = CollapseWhitespace(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

double Round2(double value) {
  const double scaled = value * 100.0;
  const double lower = std::floor(std::fabs(scaled));
  const double frac = std::fabs(scaled) - lower;
  double magnitude = frac + 1e-9 >= 0.5 ? lower + 1.0 : lower;
  double rounded = std::copysign(magnitude, scaled) / 100.0;
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string FormatFixed2(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", Round2(value));
  return buf.data();
}

std::string FormatShortest(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

}  // namespace careerfuzz
