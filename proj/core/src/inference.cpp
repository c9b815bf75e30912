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

#include "careerfuzz/inference.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <thread>
#include <tuple>

#include "careerfuzz/text.h"

namespace careerfuzz {

namespace {

const std::map<std::string, std::string, std::less<>>& SubjectAliases() {
  static const auto* aliases = new std::map<std::string, std::string, std::less<>>{
      {"maths", "mathematics"}, {"maths.", "mathematics"},
      {"phy.", "physics"},      {"chem.", "chemistry"},
  };
  return *aliases;
}

}  // namespace

std::string CanonicalSubjectKey(std::string_view name) {
  std::string key = NormalizeKey(name);
  const auto& aliases = SubjectAliases();
  if (auto it = aliases.find(key); it != aliases.end()) return it->second;
  return key;
}

SubjectId::SubjectId(std::string_view name)
    : name_(CollapseWhitespace(name)), key_(CanonicalSubjectKey(name)) {
  if (key_.empty()) {
    throw Error(ErrorCode::kInvalidProfile, "empty subject name");
  }
}

Profile::Profile(std::string student_id, std::vector<Entry> scores)
    : student_id_(std::move(student_id)), scores_(std::move(scores)) {
  if (CollapseWhitespace(student_id_).empty()) {
    throw Error(ErrorCode::kInvalidProfile, "empty student id");
  }
  if (scores_.empty()) {
    throw Error(ErrorCode::kInvalidProfile,
                "student '" + student_id_ + "' has no scores");
  }
  for (size_t i = 0; i < scores_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (scores_[i].first == scores_[j].first) {
        throw Error(ErrorCode::kInvalidProfile,
                    "student '" + student_id_ + "' lists subject '" +
                        scores_[i].first.name() + "' twice (as '" +
                        scores_[j].first.name() + "')");
      }
    }
  }
}

std::optional<Score> Profile::Find(const SubjectId& subject) const {
  for (const auto& [id, score] : scores_) {
    if (id == subject) return score;
  }
  return std::nullopt;
}

std::vector<std::string> Rulebook::FieldNames() const {
  std::vector<std::string> names;
  std::vector<std::string> keys;
  for (const auto& rule : rules) {
    std::string key = NormalizeKey(rule.field);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(std::move(key));
      names.push_back(rule.field);
    }
  }
  return names;
}

bool Equivalent(const Rulebook& a, const Rulebook& b, double weight_tolerance) {
  if (!(a.categories == b.categories)) return false;
  if (a.rules.size() != b.rules.size()) return false;
  for (size_t i = 0; i < a.rules.size(); ++i) {
    const Rule& x = a.rules[i];
    const Rule& y = b.rules[i];
    if (x.id != y.id || x.field != y.field || x.consequent != y.consequent ||
        x.clauses.size() != y.clauses.size()) {
      return false;
    }
    for (size_t j = 0; j < x.clauses.size(); ++j) {
      const Clause& p = x.clauses[j];
      const Clause& q = y.clauses[j];
      if (p.subject.name() != q.subject.name() || p.category != q.category ||
          std::fabs(p.weight - q.weight) > weight_tolerance) {
        return false;
      }
    }
  }
  return true;
}

const CategoryAssessment* FieldAssessment::Find(
    std::string_view category) const {
  for (const auto& c : categories) {
    if (NormalizeKey(c.category) == NormalizeKey(category)) return &c;
  }
  return nullptr;
}

double FieldAssessment::ScoreOr0(std::string_view category) const {
  const auto* c = Find(category);
  return c ? c->score : 0.0;
}

namespace {

Rule MakeRule(std::string field, std::string id, std::string consequent,
              std::vector<std::tuple<std::string, std::string, double>> terms) {
  Rule rule{std::move(id), {}, std::move(field), std::move(consequent)};
  for (auto& [subject, category, weight] : terms) {
    rule.clauses.push_back({SubjectId(subject), std::move(category), weight});
  }
  return rule;
}

// Engineering and Medical share E1-E4 and G1-G4; `lead` is Mathematics or
// Biology.
void AddSciencePrefix(std::vector<Rule>& rules, const std::string& field,
                      const std::string& lead) {
  constexpr double kThird = 1.0 / 3.0;
  const std::string ex = "Excellent";
  const std::string gd = "Good";
  rules.push_back(MakeRule(field, "E1", ex,
      {{lead, ex, kThird}, {"Physics", ex, kThird}, {"Chemistry", ex, kThird}}));
  rules.push_back(MakeRule(field, "E2", ex,
      {{lead, ex, 0.4}, {"Physics", ex, 0.4}, {"Chemistry", gd, 0.2}}));
  rules.push_back(MakeRule(field, "E3", ex,
      {{lead, ex, 0.4}, {"Physics", gd, 0.2}, {"Chemistry", ex, 0.4}}));
  rules.push_back(MakeRule(field, "E4", ex,
      {{lead, gd, 0.2}, {"Physics", ex, 0.4}, {"Chemistry", ex, 0.4}}));
  rules.push_back(MakeRule(field, "G1", gd,
      {{lead, ex, 0.4}, {"Physics", gd, 0.3}, {"Chemistry", gd, 0.3}}));
  rules.push_back(MakeRule(field, "G2", gd,
      {{lead, gd, 0.3}, {"Physics", ex, 0.4}, {"Chemistry", gd, 0.3}}));
  rules.push_back(MakeRule(field, "G3", gd,
      {{lead, gd, 0.3}, {"Physics", gd, 0.3}, {"Chemistry", ex, 0.4}}));
  rules.push_back(MakeRule(field, "G4", gd,
      {{lead, gd, kThird}, {"Physics", gd, kThird}, {"Chemistry", gd, kThird}}));
}

}  // namespace

Rulebook BuiltinRulebook() {
  const std::string av = "Average";
  const std::string gd = "Good";
  const std::string ex = "Excellent";
  std::vector<Rule> rules;

  AddSciencePrefix(rules, "Engineering", "Mathematics");
  rules.push_back(MakeRule("Engineering", "G5", gd,
      {{"Mathematics", ex, 0.4}, {"Physics", gd, 0.35}, {"Chemistry", av, 0.25}}));
  rules.push_back(MakeRule("Engineering", "G6", gd,
      {{"Mathematics", gd, 0.35}, {"Physics", ex, 0.4}, {"Chemistry", av, 0.25}}));
  rules.push_back(MakeRule("Engineering", "G7", gd,
      {{"Mathematics", gd, 0.4}, {"Physics", gd, 0.4}, {"Chemistry", av, 0.2}}));

  AddSciencePrefix(rules, "Medical", "Biology");
  rules.push_back(MakeRule("Medical", "G5", gd,
      {{"Biology", gd, 0.4}, {"Physics", gd, 0.4}, {"Chemistry", av, 0.2}}));
  rules.push_back(MakeRule("Medical", "G6", gd,
      {{"Biology", gd, 0.4}, {"Physics", av, 0.2}, {"Chemistry", gd, 0.4}}));
  rules.push_back(MakeRule("Medical", "G7", gd,
      {{"Biology", av, 0.2}, {"Physics", gd, 0.4}, {"Chemistry", gd, 0.4}}));

  const std::string hs = "Home Science";
  const std::string hh = "House hold";
  rules.push_back(MakeRule("Hospitality", "Eh1", ex, {{hs, ex, 0.5}, {hh, ex, 0.5}}));
  rules.push_back(MakeRule("Hospitality", "Eh2", ex, {{hs, ex, 0.7}, {hh, gd, 0.3}}));
  rules.push_back(MakeRule("Hospitality", "Eh3", ex, {{hs, gd, 0.3}, {hh, ex, 0.7}}));
  rules.push_back(MakeRule("Hospitality", "Gh1", gd, {{hs, gd, 0.5}, {hh, gd, 0.5}}));
  rules.push_back(MakeRule("Hospitality", "Gh2", gd, {{hs, gd, 0.7}, {hh, av, 0.3}}));
  rules.push_back(MakeRule("Hospitality", "Gh3", gd, {{hs, av, 0.3}, {hh, gd, 0.7}}));

  return Rulebook{PresetCategorySet(kPresetTable1Fitted), std::move(rules)};
}

RuleScore EvaluateRule(const Rule& rule, const Profile& profile,
                       const CategorySet& categories) {
  RuleScore result{rule.id, 0.0, {}};
  result.contributions.reserve(rule.clauses.size());
  for (const Clause& clause : rule.clauses) {
    std::optional<Score> score = profile.Find(clause.subject);
    if (!score) {
      throw Error(ErrorCode::kMissingSubject,
                  "student '" + profile.student_id() + "' has no score for '" +
                      clause.subject.name() + "' (field '" + rule.field +
                      "', rule '" + rule.id + "')");
    }
    const MembershipFunction* mf = categories.Find(clause.category);
    if (!mf) {
      throw Error(ErrorCode::kUnknownCategory,
                  "category '" + clause.category + "' used by rule '" +
                      rule.id + "' is not defined");
    }
    const double grade = mf->Evaluate(*score).value();
    result.value += clause.weight * grade;
    result.contributions.push_back(
        {clause.subject, clause.category, clause.weight, score->value(), grade});
  }
  return result;
}

double AggregateCategory(std::span<const RuleScore> rule_scores) {
  if (rule_scores.empty()) {
    throw Error(ErrorCode::kEmptyRuleSet, "no rule scores to aggregate");
  }
  double sum = 0.0;
  for (const auto& rs : rule_scores) sum += rs.value;
  return sum / static_cast<double>(rule_scores.size());
}

std::vector<FieldAssessment> AssessProfile(const Rulebook& rulebook,
                                           const Profile& profile,
                                           std::span<const std::string> fields) {
  std::vector<std::string> selected = rulebook.FieldNames();
  if (!fields.empty()) {
    std::vector<std::string> filtered;
    for (const auto& wanted : fields) {
      auto it = std::find_if(selected.begin(), selected.end(),
                             [&](const std::string& f) {
                               return NormalizeKey(f) == NormalizeKey(wanted);
                             });
      if (it == selected.end()) {
        throw Error(ErrorCode::kUnknownField,
                    "rulebook has no field '" + wanted + "'");
      }
      filtered.push_back(*it);
    }
    selected = std::move(filtered);
  }

  std::vector<std::string> selected_keys;
  std::vector<FieldAssessment> out;
  out.reserve(selected.size());
  for (const auto& field : selected) {
    selected_keys.push_back(NormalizeKey(field));
    out.push_back({field, {}});
  }
  // Normalized consequent keys, parallel to each field's categories.
  std::vector<std::vector<std::string>> category_keys(selected.size());

  for (const Rule& rule : rulebook.rules) {
    const auto field_it = std::find(selected_keys.begin(), selected_keys.end(),
                                    NormalizeKey(rule.field));
    if (field_it == selected_keys.end()) continue;
    const size_t f = static_cast<size_t>(field_it - selected_keys.begin());
    RuleScore score = EvaluateRule(rule, profile, rulebook.categories);

    std::vector<std::string>& keys = category_keys[f];
    std::vector<CategoryAssessment>& categories = out[f].categories;
    std::string consequent_key = NormalizeKey(rule.consequent);
    auto key_it = std::find(keys.begin(), keys.end(), consequent_key);
    if (key_it == keys.end()) {
      keys.push_back(std::move(consequent_key));
      categories.push_back({rule.consequent, 0.0, {}});
      key_it = std::prev(keys.end());
    }
    categories[static_cast<size_t>(key_it - keys.begin())].rule_scores.push_back(
        std::move(score));
  }
  for (auto& assessment : out) {
    for (auto& category : assessment.categories) {
      category.score = AggregateCategory(category.rule_scores);
    }
  }
  return out;
}

std::vector<std::vector<FieldAssessment>> AssessBatch(
    const Rulebook& rulebook, std::span<const Profile> profiles,
    unsigned threads) {
  std::vector<std::vector<FieldAssessment>> results(profiles.size());
  std::vector<std::exception_ptr> errors(profiles.size());
  const size_t workers = std::max<size_t>(
      1, std::min<size_t>(threads == 0 ? 1 : threads, profiles.size()));

  auto work = [&](size_t begin) {
    for (size_t i = begin; i < profiles.size(); i += workers) {
      try {
        results[i] = AssessProfile(rulebook, profiles[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

Ranking RankFields(std::span<const FieldAssessment> assessments) {
  if (assessments.empty()) {
    throw Error(ErrorCode::kEmptyAssessmentList, "no field assessments to rank");
  }
  Ranking ranking;
  ranking.reserve(assessments.size());
  for (const auto& a : assessments) {
    ranking.push_back({a.field, a.ScoreOr0(kExcellent), a.ScoreOr0(kGood)});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedField& x, const RankedField& y) {
                     if (x.excellent != y.excellent) return x.excellent > y.excellent;
                     if (x.good != y.good) return x.good > y.good;
                     const std::string kx = NormalizeKey(x.field);
                     const std::string ky = NormalizeKey(y.field);
                     if (kx != ky) return kx < ky;
                     return x.field < y.field;
                   });
  return ranking;
}

std::vector<Diagnostic> ValidateRulebook(const Rulebook& rulebook) {
  std::vector<Diagnostic> out;
  size_t current = 0;
  auto error = [&](std::string code, std::string message) {
    out.push_back({Severity::kError, std::move(code), std::move(message), current});
  };

  for (size_t i = 0; i < rulebook.rules.size(); ++i) {
    const Rule& rule = rulebook.rules[i];
    current = i;
    const std::string where = "rule '" + rule.id + "' in field '" + rule.field + "'";
    if (CollapseWhitespace(rule.field).empty()) {
      error("EmptyField", "rule '" + rule.id + "' has an empty field name");
    }
    if (CollapseWhitespace(rule.id).empty()) {
      error("EmptyRuleId", "a rule in field '" + rule.field + "' has no id");
    }
    for (size_t j = 0; j < i; ++j) {
      const Rule& other = rulebook.rules[j];
      if (NormalizeKey(other.field) == NormalizeKey(rule.field) &&
          NormalizeKey(other.id) == NormalizeKey(rule.id)) {
        error("DuplicateRuleId", where + " reuses an id already defined in the field");
        break;
      }
    }
    if (rule.clauses.empty()) {
      error("EmptyRule", where + " has no clauses");
    }
    if (!rulebook.categories.Contains(rule.consequent)) {
      error("UnknownCategory",
            where + " concludes unknown category '" + rule.consequent + "'");
    }
    double sum = 0.0;
    for (size_t c = 0; c < rule.clauses.size(); ++c) {
      const Clause& clause = rule.clauses[c];
      sum += clause.weight;
      if (!(clause.weight > 0.0 && clause.weight <= 1.0)) {
        error("InvalidWeight", where + " gives '" + clause.subject.name() +
                                   "' weight " + FormatShortest(clause.weight) +
                                   " outside (0, 1]");
      }
      if (!rulebook.categories.Contains(clause.category)) {
        error("UnknownCategory", where + " uses unknown category '" +
                                     clause.category + "'");
      }
      for (size_t d = 0; d < c; ++d) {
        if (rule.clauses[d].subject == clause.subject) {
          error("DuplicateSubject", where + " mentions subject '" +
                                        clause.subject.name() + "' twice");
          break;
        }
      }
    }
    if (!rule.clauses.empty() && !(std::fabs(sum - 1.0) <= kWeightSumTolerance)) {
      error("WeightSumViolation",
            where + " has weights summing to " + FormatShortest(sum) + ", not 1");
    }
  }
  return out;
}

AssessmentExplanation ExplainAssessment(const FieldAssessment& assessment) {
  AssessmentExplanation out{assessment.field, {}};
  for (const auto& category : assessment.categories) {
    CategoryExplanation ce{category.category, category.score, {}};
    for (const auto& rs : category.rule_scores) {
      RuleExplanation re{rs.rule_id, rs.value, 0.0, rs.contributions, {}};
      for (size_t i = 0; i < rs.contributions.size(); ++i) {
        const Contribution& c = rs.contributions[i];
        re.contribution_sum += c.weight * c.grade;
        if (i > 0) re.formula += " + ";
        re.formula += FormatShortest(c.weight) + "*" + c.category + "(" +
                      c.subject.name() + "=" + FormatShortest(c.score) +
                      " -> " + FormatFixed2(c.grade) + ")";
      }
      ce.rules.push_back(std::move(re));
    }
    out.categories.push_back(std::move(ce));
  }
  return out;
}

}  // namespace careerfuzz
