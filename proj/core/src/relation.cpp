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

#include "careerfuzz/relation.h"

#include <algorithm>
#include <map>

#include "careerfuzz/text.h"

namespace careerfuzz {

std::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kField: return "field";
    case EntityKind::kCourse: return "course";
    case EntityKind::kJob: return "job";
    case EntityKind::kInstitute: return "institute";
  }
  return "entity";
}

void FiniteRelation::Add(const EntityId& from, const EntityId& to) {
  if (from.kind != source_kind_ || to.kind != target_kind_) {
    throw Error(ErrorCode::kKindMismatch,
                "pair (" + std::string(EntityKindName(from.kind)) + " '" +
                    from.name + "', " + std::string(EntityKindName(to.kind)) +
                    " '" + to.name + "') does not fit a " +
                    std::string(EntityKindName(source_kind_)) + " -> " +
                    std::string(EntityKindName(target_kind_)) + " relation");
  }
  pairs_.emplace(from, to);
}

bool FiniteRelation::Contains(const EntityId& from, const EntityId& to) const {
  return pairs_.count({from, to}) != 0;
}

FiniteRelation Compose(const FiniteRelation& first,
                       const FiniteRelation& second) {
  if (first.target_kind() != second.source_kind()) {
    throw Error(ErrorCode::kKindMismatch,
                "cannot compose a relation ending in " +
                    std::string(EntityKindName(first.target_kind())) +
                    " with one starting from " +
                    std::string(EntityKindName(second.source_kind())));
  }
  // Targets of `second` get dense indices in sorted order, so per-source
  // deduplication is a mark array and sorted indices mean sorted targets.
  std::vector<const EntityId*> targets;
  for (const auto& pair : second.pairs()) targets.push_back(&pair.second);
  const auto by_value = [](const EntityId* x, const EntityId* y) { return *x < *y; };
  const auto same_value = [](const EntityId* x, const EntityId* y) { return *x == *y; };
  std::sort(targets.begin(), targets.end(), by_value);
  targets.erase(std::unique(targets.begin(), targets.end(), same_value), targets.end());

  std::map<EntityId, std::vector<size_t>> successors;
  for (const auto& [b, c] : second.pairs()) {
    const auto pos = std::lower_bound(targets.begin(), targets.end(), &c, by_value);
    successors[b].push_back(static_cast<size_t>(pos - targets.begin()));
  }

  // Pairs arrive grouped by source; collect each source's targets once.
  FiniteRelation result(first.source_kind(), second.target_kind());
  std::vector<char> seen(targets.size(), 0);
  std::vector<size_t> reached;
  auto pair_it = first.pairs().begin();
  while (pair_it != first.pairs().end()) {
    const EntityId& a = pair_it->first;
    for (; pair_it != first.pairs().end() && pair_it->first == a; ++pair_it) {
      auto it = successors.find(pair_it->second);
      if (it == successors.end()) continue;
      for (size_t c : it->second) {
        if (!seen[c]) {
          seen[c] = 1;
          reached.push_back(c);
        }
      }
    }
    std::sort(reached.begin(), reached.end());
    for (size_t c : reached) {
      result.Add(a, *targets[c]);
      seen[c] = 0;
    }
    reached.clear();
  }
  return result;
}

std::vector<EntityId> Image(const FiniteRelation& relation, const EntityId& a) {
  if (a.kind != relation.source_kind()) {
    throw Error(ErrorCode::kKindMismatch,
                std::string(EntityKindName(a.kind)) + " '" + a.name +
                    "' is not a source of a " +
                    std::string(EntityKindName(relation.source_kind())) +
                    " relation");
  }
  // Pairs are ordered by source then target, so the image is one sorted run.
  std::vector<EntityId> out;
  auto it = relation.pairs().lower_bound({a, EntityId{relation.target_kind(), ""}});
  for (; it != relation.pairs().end() && it->first == a; ++it) {
    out.push_back(it->second);
  }
  return out;
}

const InstituteRecord* KnowledgeBase::FindInstitute(std::string_view name) const {
  for (const auto& inst : institutes) {
    if (inst.name == name) return &inst;
  }
  return nullptr;
}

std::optional<EntityId> KnowledgeBase::FindField(std::string_view name) const {
  for (const auto& f : fields) {
    if (f.name == name) return f;
  }
  const std::string key = NormalizeKey(name);
  for (const auto& f : fields) {
    if (NormalizeKey(f.name) == key) return f;
  }
  return std::nullopt;
}

Recommendation Recommend(const KnowledgeBase& kb, std::string_view field,
                         std::optional<std::string_view> region) {
  std::optional<EntityId> id = kb.FindField(field);
  if (!id) {
    throw Error(ErrorCode::kUnknownField,
                "field '" + std::string(field) + "' is not in the knowledge base");
  }
  Recommendation rec{*id, Image(kb.field_courses, *id), {}, {}};
  for (EntityId& inst : Image(Compose(kb.field_courses, kb.course_institutes), *id)) {
    if (region) {
      const InstituteRecord* record = kb.FindInstitute(inst.name);
      if (!record || !record->region ||
          NormalizeKey(*record->region) != NormalizeKey(*region)) {
        continue;
      }
    }
    rec.institutes.push_back(std::move(inst));
  }
  rec.jobs = Image(Compose(kb.field_courses, kb.course_jobs), *id);
  return rec;
}

std::vector<Diagnostic> ValidateKnowledgeBase(const KnowledgeBase& kb) {
  std::vector<Diagnostic> out;
  auto report = [&](Severity severity, std::string code, std::string message) {
    out.push_back({severity, std::move(code), std::move(message), std::nullopt});
  };

  std::map<EntityKind, std::set<std::string>> declared;
  auto declare = [&](EntityKind kind, const std::string& name) {
    if (CollapseWhitespace(name).empty()) {
      report(Severity::kError, "EmptyName",
             "a " + std::string(EntityKindName(kind)) + " has an empty name");
      return;
    }
    auto& names = declared[kind];
    for (const auto& seen : names) {
      if (NormalizeKey(seen) == NormalizeKey(name)) {
        report(Severity::kError, "DuplicateEntity",
               std::string(EntityKindName(kind)) + " '" + name +
                   "' is declared more than once");
        return;
      }
    }
    names.insert(name);
  };
  for (const auto& e : kb.fields) declare(EntityKind::kField, e.name);
  for (const auto& e : kb.courses) declare(EntityKind::kCourse, e.name);
  for (const auto& e : kb.jobs) declare(EntityKind::kJob, e.name);
  for (const auto& e : kb.institutes) declare(EntityKind::kInstitute, e.name);

  auto check_relation = [&](const FiniteRelation& rel, std::string_view label) {
    size_t index = 0;
    for (const auto& [a, b] : rel.pairs()) {
      for (const EntityId* end : {&a, &b}) {
        if (declared[end->kind].count(end->name) == 0) {
          out.push_back({Severity::kError, "DanglingReference",
                         std::string(label) + " pair ('" + a.name + "', '" +
                             b.name + "') references undeclared " +
                             std::string(EntityKindName(end->kind)) + " '" +
                             end->name + "'",
                         index});
        }
      }
      ++index;
    }
  };
  check_relation(kb.field_courses, "R");
  check_relation(kb.course_institutes, "S");
  check_relation(kb.course_jobs, "T");

  std::set<std::string> fields_with_courses;
  std::set<std::string> reachable_courses;
  for (const auto& [f, c] : kb.field_courses.pairs()) {
    fields_with_courses.insert(f.name);
    reachable_courses.insert(c.name);
  }
  std::set<std::string> courses_with_outlets;
  for (const auto& [c, i] : kb.course_institutes.pairs()) courses_with_outlets.insert(c.name);
  for (const auto& [c, j] : kb.course_jobs.pairs()) courses_with_outlets.insert(c.name);

  for (const auto& f : kb.fields) {
    if (fields_with_courses.count(f.name) == 0) {
      report(Severity::kWarning, "FieldWithoutCourses",
             "field '" + f.name + "' has no related courses");
    }
  }
  for (const auto& c : kb.courses) {
    if (reachable_courses.count(c.name) == 0) {
      report(Severity::kWarning, "UnreachableCourse",
             "course '" + c.name + "' is not related to any field");
    }
    if (courses_with_outlets.count(c.name) == 0) {
      report(Severity::kWarning, "CourseWithoutOutlets",
             "course '" + c.name + "' has no institutes and no jobs");
    }
  }
  return out;
}

}  // namespace careerfuzz
