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

#ifndef CAREERFUZZ_IO_H_
#define CAREERFUZZ_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "careerfuzz/fuzzy.h"
#include "careerfuzz/inference.h"
#include "careerfuzz/relation.h"

namespace careerfuzz {

// Throws IoError.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

// {"students":[{"id":"1","scores":{"Maths.":82,"Phy.":85}}]}
// Throws MalformedDocument (with line numbers for syntax errors),
// ScoreOutOfRange or InvalidProfile.
std::vector<Profile> ParseProfiles(std::string_view json_text);
std::vector<Profile> LoadProfiles(const std::filesystem::path& path);

// {"fields":[..], "courses":[..], "jobs":[..],
//  "institutes":[{"name":..,"region":..}], "R":[[field,course]],
//  "S":[[course,institute]], "T":[[course,job]]}
// Documents with error-severity diagnostics are rejected; the first error's
// code decides the thrown ErrorCode (DanglingReference or MalformedDocument).
// With `validate` off only the JSON shape is checked, so callers can run
// ValidateKnowledgeBase themselves and list every finding.
KnowledgeBase ParseKnowledgeBase(std::string_view json_text, bool validate = true);
KnowledgeBase LoadKnowledgeBase(const std::filesystem::path& path);
std::string SerializeKnowledgeBase(const KnowledgeBase& kb);
void SaveKnowledgeBase(const KnowledgeBase& kb, const std::filesystem::path& path);

struct StudentReport {
  std::string student_id;
  std::vector<FieldAssessment> assessments;
  Ranking ranking;
  std::optional<Recommendation> recommendation;
  std::optional<std::string> note;
};

struct Report {
  std::vector<StudentReport> students;
};

enum class RenderMode { kText, kJson };

// Phase 1 for every profile and, with a knowledge base, phase 2 for each
// student's top-ranked field. A top field missing from the knowledge base
// is recorded as a note, not an error.
Report BuildReport(const Rulebook& rulebook, std::span<const Profile> profiles,
                   const KnowledgeBase* kb = nullptr,
                   std::optional<std::string_view> region = std::nullopt,
                   unsigned threads = 1);

// Text mode prints two decimals (half away from zero); JSON mode prints
// full precision with a fixed key order.
void RenderReport(const Report& report, RenderMode mode, std::ostream& out);
void RenderRecommendation(const Recommendation& rec, RenderMode mode,
                          std::ostream& out);

// CSV with header "x,grade" and LF line endings.
void WriteSamplesCsv(std::span<const SamplePoint> samples, std::ostream& out);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_IO_H_
