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

#include "careerfuzz/fuzzy.h"

#include <cmath>

#include "careerfuzz/error.h"
#include "careerfuzz/text.h"

namespace careerfuzz {

Score::Score(double value) : value_(value) {
  if (!(value >= kMin && value <= kMax)) {
    throw Error(ErrorCode::kScoreOutOfRange,
                "score " + FormatShortest(value) + " is outside [0, 100]");
  }
}

MembershipGrade::MembershipGrade(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidGrade,
                "grade " + FormatShortest(value) + " is outside [0, 1]");
  }
}

MembershipFunction::MembershipFunction(double rise_start, double rise_end,
                                       std::optional<double> cutoff)
    : rise_start_(Score(rise_start).value()),
      rise_end_(Score(rise_end).value()),
      cutoff_(cutoff ? Score(*cutoff).value()
                     : std::numeric_limits<double>::infinity()) {
  if (!(rise_start_ < rise_end_)) {
    throw Error(ErrorCode::kInvalidMembershipFunction,
                "rise start " + FormatShortest(rise_start_) +
                    " must be below rise end " + FormatShortest(rise_end_));
  }
  if (!(rise_end_ <= cutoff_)) {
    throw Error(ErrorCode::kInvalidMembershipFunction,
                "cutoff " + FormatShortest(cutoff_) +
                    " must not be below rise end " + FormatShortest(rise_end_));
  }
}

MembershipGrade MembershipFunction::Evaluate(Score score) const {
  const double x = score.value();
  if (x < rise_start_) return MembershipGrade(0.0);
  if (x <= rise_end_) {
    return MembershipGrade((x - rise_start_) / (rise_end_ - rise_start_));
  }
  if (x <= cutoff_) return MembershipGrade(1.0);
  return MembershipGrade(0.0);
}

CategorySet::CategorySet(std::vector<Entry> entries, std::string preset_name)
    : entries_(std::move(entries)), preset_name_(std::move(preset_name)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::kInvalidCategorySet,
                "a category set needs at least one category");
  }
  keys_.reserve(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    keys_.push_back(NormalizeKey(entries_[i].first));
    if (keys_[i].empty()) {
      throw Error(ErrorCode::kInvalidCategorySet, "empty category label");
    }
    for (size_t j = 0; j < i; ++j) {
      if (keys_[i] == keys_[j]) {
        throw Error(ErrorCode::kInvalidCategorySet,
                    "duplicate category label '" + entries_[i].first + "'");
      }
    }
  }
  if (preset_name_.empty()) preset_name_ = std::string(kPresetCustom);
}

const MembershipFunction* CategorySet::Find(std::string_view label) const {
  const std::string key = NormalizeKey(label);
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == key) return &entries_[i].second;
  }
  return nullptr;
}

const MembershipFunction& CategorySet::At(std::string_view label) const {
  if (const auto* mf = Find(label)) return *mf;
  throw Error(ErrorCode::kUnknownCategory,
              "category '" + std::string(label) + "' is not defined");
}

CategorySet CategorySet::WithEntry(std::string label,
                                   MembershipFunction mf) const {
  std::vector<Entry> entries = entries_;
  const std::string key = NormalizeKey(label);
  bool replaced = false;
  for (auto& entry : entries) {
    if (NormalizeKey(entry.first) == key) {
      entry = {std::move(label), mf};
      replaced = true;
      break;
    }
  }
  if (!replaced) entries.emplace_back(std::move(label), mf);

  if (preset_name_ != kPresetCustom) {
    CategorySet preset = PresetCategorySet(preset_name_);
    if (preset.entries_ == entries) return preset;
  }
  return CategorySet(std::move(entries), std::string(kPresetCustom));
}

std::vector<CategoryGrade> CategoryGrades(const CategorySet& categories,
                                          Score x) {
  std::vector<CategoryGrade> grades;
  grades.reserve(categories.entries().size());
  for (const auto& [label, mf] : categories.entries()) {
    grades.push_back({label, mf.Evaluate(x)});
  }
  return grades;
}

CategorySet PresetCategorySet(std::string_view name) {
  // Average and Good are shared; the presets differ only in where the
  // Excellent ramp tops out.
  double excellent_end = 0.0;
  if (EqualsIgnoreCase(name, kPresetPrintedEq3)) {
    excellent_end = 90.0;
  } else if (EqualsIgnoreCase(name, kPresetTable1Fitted)) {
    excellent_end = 85.0;
  } else {
    throw Error(ErrorCode::kUnknownPreset,
                "unknown category preset '" + std::string(name) +
                    "'; valid presets are '" + std::string(kPresetPrintedEq3) +
                    "' and '" + std::string(kPresetTable1Fitted) + "'");
  }
  std::string canonical(excellent_end == 90.0 ? kPresetPrintedEq3
                                              : kPresetTable1Fitted);
  return CategorySet(
      {
          {"Average", MembershipFunction(40, 55, 60)},
          {"Good", MembershipFunction(55, 70, 75)},
          {"Excellent", MembershipFunction(70, excellent_end)},
      },
      std::move(canonical));
}

std::vector<std::string_view> PresetNames() {
  return {kPresetPrintedEq3, kPresetTable1Fitted};
}

std::vector<SamplePoint> SampleMembership(const MembershipFunction& mf,
                                          Score x_min, Score x_max,
                                          int count) {
  if (count < 2 || !(x_min.value() < x_max.value())) {
    throw Error(ErrorCode::kInvalidSampleRange,
                "need at least 2 samples over a non-empty range");
  }
  std::vector<SamplePoint> points;
  points.reserve(static_cast<size_t>(count));
  const double lo = x_min.value();
  const double span = x_max.value() - lo;
  for (int i = 0; i < count; ++i) {
    double x = i == count - 1 ? x_max.value()
                              : lo + span * static_cast<double>(i) /
                                         static_cast<double>(count - 1);
    points.push_back({x, mf.Evaluate(Score(x)).value()});
  }
  return points;
}

}  // namespace careerfuzz
