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

#ifndef CAREERFUZZ_INFERENCE_H_
#define CAREERFUZZ_INFERENCE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "careerfuzz/error.h"
#include "careerfuzz/fuzzy.h"

namespace careerfuzz {

inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr std::string_view kExcellent = "Excellent";
inline constexpr std::string_view kGood = "Good";

// Subject or vocational-interest name. Two ids are equal when their
// canonical keys match: case and whitespace are normalized and the
// abbreviations used in mark sheets ("Maths.", "Phy.", "Chem.") resolve to
// the full subject names.
class SubjectId {
 public:
  explicit SubjectId(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  const std::string& key() const noexcept { return key_; }

  bool operator==(const SubjectId& other) const { return key_ == other.key_; }
  std::strong_ordering operator<=>(const SubjectId& other) const {
    return key_ <=> other.key_;
  }

 private:
  std::string name_;
  std::string key_;
};

std::string CanonicalSubjectKey(std::string_view name);

class Profile {
 public:
  using Entry = std::pair<SubjectId, Score>;

  // Throws InvalidProfile on an empty id, no scores or a repeated subject.
  Profile(std::string student_id, std::vector<Entry> scores);

  const std::string& student_id() const noexcept { return student_id_; }
  const std::vector<Entry>& scores() const noexcept { return scores_; }
  std::optional<Score> Find(const SubjectId& subject) const;

 private:
  std::string student_id_;
  std::vector<Entry> scores_;
};

struct Clause {
  SubjectId subject;
  std::string category;
  double weight = 0.0;
};

// Weighted-average rule: score = sum of weight * grade over the clauses.
struct Rule {
  std::string id;
  std::vector<Clause> clauses;
  std::string field;
  std::string consequent;
};

// Rules carry their field; field order is the order of first appearance.
struct Rulebook {
  CategorySet categories;
  std::vector<Rule> rules;

  std::vector<std::string> FieldNames() const;
};

// Structural equality with weights compared to within `weight_tolerance`.
bool Equivalent(const Rulebook& a, const Rulebook& b,
                double weight_tolerance = 1e-12);

struct Contribution {
  SubjectId subject;
  std::string category;
  double weight = 0.0;
  double score = 0.0;
  double grade = 0.0;
};

struct RuleScore {
  std::string rule_id;
  double value = 0.0;
  std::vector<Contribution> contributions;
};

struct CategoryAssessment {
  std::string category;
  double score = 0.0;
  std::vector<RuleScore> rule_scores;
};

struct FieldAssessment {
  std::string field;
  std::vector<CategoryAssessment> categories;

  const CategoryAssessment* Find(std::string_view category) const;
  // 0 when the field has no rules for `category`.
  double ScoreOr0(std::string_view category) const;
};

struct RankedField {
  std::string field;
  double excellent = 0.0;
  double good = 0.0;
};

using Ranking = std::vector<RankedField>;

// Engineering, Medical and Hospitality rules over the "table1-fitted"
// categories (28 rules).
Rulebook BuiltinRulebook();

// Throws MissingSubject or UnknownCategory.
RuleScore EvaluateRule(const Rule& rule, const Profile& profile,
                       const CategorySet& categories);

// Arithmetic mean of every rule value, zeros included. Throws EmptyRuleSet.
double AggregateCategory(std::span<const RuleScore> rule_scores);

// Evaluates every field (or only `fields`, matched case-insensitively).
// A missing subject is an error naming the field and rule.
std::vector<FieldAssessment> AssessProfile(
    const Rulebook& rulebook, const Profile& profile,
    std::span<const std::string> fields = {});

// Assesses profiles on up to `threads` workers; results keep input order.
// If any profile fails, the error of the first failing profile is thrown.
std::vector<std::vector<FieldAssessment>> AssessBatch(
    const Rulebook& rulebook, std::span<const Profile> profiles,
    unsigned threads = 1);

// Excellent descending, then Good descending, then field name ascending.
// Throws EmptyAssessmentList.
Ranking RankFields(std::span<const FieldAssessment> assessments);

std::vector<Diagnostic> ValidateRulebook(const Rulebook& rulebook);

struct RuleExplanation {
  std::string rule_id;
  double value = 0.0;
  double contribution_sum = 0.0;
  std::vector<Contribution> contributions;
  // e.g. "0.4*Excellent(Mathematics=82 -> 0.8) + ..."
  std::string formula;
};

struct CategoryExplanation {
  std::string category;
  double final_score = 0.0;
  std::vector<RuleExplanation> rules;
};

struct AssessmentExplanation {
  std::string field;
  std::vector<CategoryExplanation> categories;
};

AssessmentExplanation ExplainAssessment(const FieldAssessment& assessment);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_INFERENCE_H_
