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

#ifndef CAREERFUZZ_RELATION_H_
#define CAREERFUZZ_RELATION_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "careerfuzz/error.h"

namespace careerfuzz {

enum class EntityKind { kField, kCourse, kJob, kInstitute };

std::string_view EntityKindName(EntityKind kind);

struct EntityId {
  EntityKind kind = EntityKind::kField;
  std::string name;

  auto operator<=>(const EntityId&) const = default;
};

struct InstituteRecord {
  std::string name;
  std::optional<std::string> region;

  EntityId id() const { return {EntityKind::kInstitute, name}; }
  bool operator==(const InstituteRecord&) const = default;
};

// Crisp binary relation between two entity kinds with set semantics.
class FiniteRelation {
 public:
  using Pair = std::pair<EntityId, EntityId>;

  FiniteRelation(EntityKind source_kind, EntityKind target_kind)
      : source_kind_(source_kind), target_kind_(target_kind) {}

  // Throws KindMismatch when an endpoint has the wrong kind.
  void Add(const EntityId& from, const EntityId& to);
  bool Contains(const EntityId& from, const EntityId& to) const;

  EntityKind source_kind() const noexcept { return source_kind_; }
  EntityKind target_kind() const noexcept { return target_kind_; }
  const std::set<Pair>& pairs() const noexcept { return pairs_; }
  size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool operator==(const FiniteRelation&) const = default;

 private:
  EntityKind source_kind_;
  EntityKind target_kind_;
  std::set<Pair> pairs_;
};

// Left-to-right composition: (a, c) is in the result iff some b has (a, b)
// in `first` and (b, c) in `second`. Course-to-institute reachability from
// a field is Compose(field_courses, course_institutes). Throws KindMismatch
// when first's target kind differs from second's source kind.
FiniteRelation Compose(const FiniteRelation& first,
                       const FiniteRelation& second);

// Everything `a` relates to, sorted by name. Throws KindMismatch.
std::vector<EntityId> Image(const FiniteRelation& relation, const EntityId& a);

struct KnowledgeBase {
  std::vector<EntityId> fields;
  std::vector<EntityId> courses;
  std::vector<EntityId> jobs;
  std::vector<InstituteRecord> institutes;
  FiniteRelation field_courses{EntityKind::kField, EntityKind::kCourse};
  FiniteRelation course_institutes{EntityKind::kCourse, EntityKind::kInstitute};
  FiniteRelation course_jobs{EntityKind::kCourse, EntityKind::kJob};

  const InstituteRecord* FindInstitute(std::string_view name) const;
  // Exact match first, then case/whitespace-insensitive.
  std::optional<EntityId> FindField(std::string_view name) const;

  bool operator==(const KnowledgeBase&) const = default;
};

struct Recommendation {
  EntityId field;
  std::vector<EntityId> courses;
  std::vector<EntityId> institutes;
  std::vector<EntityId> jobs;

  bool operator==(const Recommendation&) const = default;
};

// Courses related to `field`, institutes offering them and jobs they lead
// to. With a region, only institutes whose region matches
// (case-insensitively) are kept. Throws UnknownField.
Recommendation Recommend(const KnowledgeBase& kb, std::string_view field,
                         std::optional<std::string_view> region = std::nullopt);

// Errors: DuplicateEntity, DanglingReference. Warnings: FieldWithoutCourses,
// UnreachableCourse, CourseWithoutOutlets.
std::vector<Diagnostic> ValidateKnowledgeBase(const KnowledgeBase& kb);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_RELATION_H_
