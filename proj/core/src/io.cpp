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

#include "careerfuzz/io.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "careerfuzz/text.h"

namespace careerfuzz {

namespace {

using Json = nlohmann::ordered_json;

size_t LineOfOffset(std::string_view text, size_t offset) {
  size_t line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

Json ParseJson(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(what) + " is not valid JSON (line " +
                    std::to_string(LineOfOffset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                    "): " + e.what());
  }
}

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedDocument, message);
}

const Json& Member(const Json& object, const char* key, const std::string& context) {
  auto it = object.find(key);
  if (it == object.end()) Malformed(context + " is missing \"" + key + "\"");
  return *it;
}

std::string NameOf(const Json& value, const std::string& context) {
  if (!value.is_string()) Malformed(context + " must be a string");
  return value.get<std::string>();
}

}  // namespace

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIoError, "error reading '" + path.string() + "'");
  }
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "error writing '" + path.string() + "'");
  }
}

std::vector<Profile> ParseProfiles(std::string_view json_text) {
  const Json doc = ParseJson(json_text, "profile document");
  if (!doc.is_object()) Malformed("profile document must be a JSON object");
  const Json& students = Member(doc, "students", "profile document");
  if (!students.is_array()) Malformed("\"students\" must be an array");
  if (students.empty()) Malformed("no profiles");

  std::vector<Profile> profiles;
  std::vector<std::string> ids;
  for (size_t i = 0; i < students.size(); ++i) {
    const Json& s = students[i];
    const std::string context = "student #" + std::to_string(i + 1);
    if (!s.is_object()) Malformed(context + " must be an object");
    const Json& id_json = Member(s, "id", context);
    std::string id;
    if (id_json.is_string()) {
      id = id_json.get<std::string>();
    } else if (id_json.is_number_integer()) {
      id = id_json.dump();
    } else {
      Malformed(context + " has a non-string id");
    }
    for (const auto& seen : ids) {
      if (seen == id) Malformed("student id '" + id + "' appears more than once");
    }
    ids.push_back(id);

    const Json& scores = Member(s, "scores", "student '" + id + "'");
    if (!scores.is_object()) Malformed("scores of student '" + id + "' must be an object");
    std::vector<Profile::Entry> entries;
    for (const auto& [subject, value] : scores.items()) {
      if (!value.is_number()) {
        Malformed("score for '" + subject + "' of student '" + id +
                  "' is not a number");
      }
      const double x = value.get<double>();
      try {
        entries.emplace_back(SubjectId(subject), Score(x));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kScoreOutOfRange) {
          throw Error(ErrorCode::kScoreOutOfRange,
                      "student '" + id + "', subject '" + subject + "': score " +
                          FormatShortest(x) + " is outside [0, 100]");
        }
        throw;
      }
    }
    profiles.emplace_back(id, std::move(entries));
  }
  return profiles;
}

std::vector<Profile> LoadProfiles(const std::filesystem::path& path) {
  return ParseProfiles(ReadTextFile(path));
}

KnowledgeBase ParseKnowledgeBase(std::string_view json_text, bool validate) {
  const Json doc = ParseJson(json_text, "knowledge base");
  if (!doc.is_object()) Malformed("knowledge base must be a JSON object");

  KnowledgeBase kb;
  auto names = [&](const char* key, EntityKind kind, std::vector<EntityId>& into) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array()) Malformed(std::string("\"") + key + "\" must be an array");
    for (const auto& v : *it) {
      into.push_back({kind, NameOf(v, std::string("entry of \"") + key + "\"")});
    }
  };
  names("fields", EntityKind::kField, kb.fields);
  names("courses", EntityKind::kCourse, kb.courses);
  names("jobs", EntityKind::kJob, kb.jobs);

  if (auto it = doc.find("institutes"); it != doc.end()) {
    if (!it->is_array()) Malformed("\"institutes\" must be an array");
    for (const auto& v : *it) {
      InstituteRecord record;
      if (v.is_string()) {
        record.name = v.get<std::string>();
      } else if (v.is_object()) {
        record.name = NameOf(Member(v, "name", "institute"), "institute name");
        if (auto r = v.find("region"); r != v.end() && !r->is_null()) {
          record.region = NameOf(*r, "region of institute '" + record.name + "'");
        }
      } else {
        Malformed("institutes must be names or {\"name\", \"region\"} objects");
      }
      kb.institutes.push_back(std::move(record));
    }
  }

  auto pairs = [&](const char* key, FiniteRelation& rel) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array()) Malformed(std::string("\"") + key + "\" must be an array");
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2) {
        Malformed(std::string("each \"") + key + "\" entry must be a two-element array");
      }
      rel.Add({rel.source_kind(), NameOf(p[0], std::string(key) + " pair")},
              {rel.target_kind(), NameOf(p[1], std::string(key) + " pair")});
    }
  };
  pairs("R", kb.field_courses);
  pairs("S", kb.course_institutes);
  pairs("T", kb.course_jobs);

  if (!validate) return kb;
  for (const Diagnostic& d : ValidateKnowledgeBase(kb)) {
    if (d.severity != Severity::kError) continue;
    throw Error(d.code == "DanglingReference" ? ErrorCode::kDanglingReference
                                              : ErrorCode::kMalformedDocument,
                d.message);
  }
  return kb;
}

KnowledgeBase LoadKnowledgeBase(const std::filesystem::path& path) {
  return ParseKnowledgeBase(ReadTextFile(path));
}

std::string SerializeKnowledgeBase(const KnowledgeBase& kb) {
  Json doc = Json::object();
  auto names = [](const std::vector<EntityId>& ids) {
    Json a = Json::array();
    for (const auto& id : ids) a.push_back(id.name);
    return a;
  };
  doc["fields"] = names(kb.fields);
  doc["courses"] = names(kb.courses);
  doc["jobs"] = names(kb.jobs);
  Json institutes = Json::array();
  for (const auto& inst : kb.institutes) {
    Json o = Json::object();
    o["name"] = inst.name;
    if (inst.region) o["region"] = *inst.region;
    institutes.push_back(std::move(o));
  }
  doc["institutes"] = std::move(institutes);
  auto pairs = [](const FiniteRelation& rel) {
    Json a = Json::array();
    for (const auto& [x, y] : rel.pairs()) a.push_back(Json::array({x.name, y.name}));
    return a;
  };
  doc["R"] = pairs(kb.field_courses);
  doc["S"] = pairs(kb.course_institutes);
  doc["T"] = pairs(kb.course_jobs);
  return doc.dump(2) + "\n";
}

void SaveKnowledgeBase(const KnowledgeBase& kb, const std::filesystem::path& path) {
  WriteTextFile(path, SerializeKnowledgeBase(kb));
}

Report BuildReport(const Rulebook& rulebook, std::span<const Profile> profiles,
                   const KnowledgeBase* kb, std::optional<std::string_view> region,
                   unsigned threads) {
  std::vector<std::vector<FieldAssessment>> assessed =
      AssessBatch(rulebook, profiles, threads);
  Report report;
  for (size_t i = 0; i < profiles.size(); ++i) {
    StudentReport student{profiles[i].student_id(), std::move(assessed[i]), {}, {}, {}};
    if (!student.assessments.empty()) {
      student.ranking = RankFields(student.assessments);
      if (kb) {
        const std::string& top = student.ranking.front().field;
        if (kb->FindField(top)) {
          student.recommendation = Recommend(*kb, top, region);
        } else {
          student.note = "field '" + top + "' is not in the knowledge base";
        }
      }
    }
    report.students.push_back(std::move(student));
  }
  return report;
}

namespace {

Json RecommendationJson(const Recommendation& rec) {
  auto names = [](const std::vector<EntityId>& ids) {
    Json a = Json::array();
    for (const auto& id : ids) a.push_back(id.name);
    return a;
  };
  Json o = Json::object();
  o["field"] = rec.field.name;
  o["courses"] = names(rec.courses);
  o["institutes"] = names(rec.institutes);
  o["jobs"] = names(rec.jobs);
  return o;
}

Json StudentJson(const StudentReport& s) {
  Json o = Json::object();
  o["id"] = s.student_id;
  Json fields = Json::array();
  for (const auto& fa : s.assessments) {
    Json f = Json::object();
    f["field"] = fa.field;
    Json cats = Json::array();
    for (const auto& ca : fa.categories) {
      Json c = Json::object();
      c["category"] = ca.category;
      c["score"] = ca.score;
      Json rules = Json::array();
      for (const auto& rs : ca.rule_scores) {
        Json r = Json::object();
        r["id"] = rs.rule_id;
        r["value"] = rs.value;
        Json contributions = Json::array();
        for (const auto& cb : rs.contributions) {
          Json k = Json::object();
          k["subject"] = cb.subject.name();
          k["category"] = cb.category;
          k["weight"] = cb.weight;
          k["score"] = cb.score;
          k["grade"] = cb.grade;
          contributions.push_back(std::move(k));
        }
        r["contributions"] = std::move(contributions);
        rules.push_back(std::move(r));
      }
      c["rules"] = std::move(rules);
      cats.push_back(std::move(c));
    }
    f["categories"] = std::move(cats);
    fields.push_back(std::move(f));
  }
  o["fields"] = std::move(fields);
  Json ranking = Json::array();
  for (const auto& r : s.ranking) {
    Json e = Json::object();
    e["field"] = r.field;
    e["excellent"] = r.excellent;
    e["good"] = r.good;
    ranking.push_back(std::move(e));
  }
  o["ranking"] = std::move(ranking);
  if (s.recommendation) o["recommendation"] = RecommendationJson(*s.recommendation);
  if (s.note) o["note"] = *s.note;
  return o;
}

std::string JoinNames(const std::vector<EntityId>& ids) {
  if (ids.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += ids[i].name;
  }
  return out;
}

void RenderRecommendationText(const Recommendation& rec, std::ostream& out,
                              std::string_view indent) {
  out << indent << "Recommendation for " << rec.field.name << "\n";
  out << indent << "  courses:    " << JoinNames(rec.courses) << "\n";
  out << indent << "  institutes: " << JoinNames(rec.institutes) << "\n";
  out << indent << "  jobs:       " << JoinNames(rec.jobs) << "\n";
}

}  // namespace

void RenderReport(const Report& report, RenderMode mode, std::ostream& out) {
  if (mode == RenderMode::kJson) {
    Json doc = Json::object();
    Json students = Json::array();
    for (const auto& s : report.students) students.push_back(StudentJson(s));
    doc["students"] = std::move(students);
    out << doc.dump(2) << "\n";
    return;
  }

  bool first = true;
  for (const auto& s : report.students) {
    if (!first) out << "\n";
    first = false;
    out << "Student " << s.student_id << "\n";
    if (s.assessments.empty()) {
      out << "  no fields assessed\n";
      continue;
    }
    for (const AssessmentExplanation& ex :
         [&] {
           std::vector<AssessmentExplanation> v;
           for (const auto& fa : s.assessments) v.push_back(ExplainAssessment(fa));
           return v;
         }()) {
      out << "  " << ex.field << "\n";
      for (const auto& cat : ex.categories) {
        std::string line = "    " + cat.category;
        line.resize(std::max<size_t>(line.size() + 1, 16), ' ');
        for (const auto& r : cat.rules) {
          line += r.rule_id + " " + FormatFixed2(r.value) + "  ";
        }
        out << line << "final " << FormatFixed2(cat.final_score) << "\n";
      }
    }
    out << "  Ranking\n";
    for (size_t i = 0; i < s.ranking.size(); ++i) {
      const auto& r = s.ranking[i];
      out << "    " << (i + 1) << ". " << r.field << "  excellent "
          << FormatFixed2(r.excellent) << "  good " << FormatFixed2(r.good) << "\n";
    }
    if (s.recommendation) RenderRecommendationText(*s.recommendation, out, "  ");
    if (s.note) out << "  note: " << *s.note << "\n";
  }
  if (report.students.empty()) out << "no fields assessed\n";
}

void RenderRecommendation(const Recommendation& rec, RenderMode mode,
                          std::ostream& out) {
  if (mode == RenderMode::kJson) {
    out << RecommendationJson(rec).dump(2) << "\n";
    return;
  }
  RenderRecommendationText(rec, out, "");
}

void WriteSamplesCsv(std::span<const SamplePoint> samples, std::ostream& out) {
  out << "x,grade\n";
  for (const auto& p : samples) {
    out << FormatShortest(p.x) << "," << FormatShortest(p.grade) << "\n";
  }
}

}  // namespace careerfuzz
