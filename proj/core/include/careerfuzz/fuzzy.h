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

#ifndef CAREERFUZZ_FUZZY_H_
#define CAREERFUZZ_FUZZY_H_

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace careerfuzz {

// A mark or vocational score on the 0..100 scale. Construction rejects
// anything outside the scale (including NaN) with ScoreOutOfRange.
class Score {
 public:
  static constexpr double kMin = 0.0;
  static constexpr double kMax = 100.0;

  explicit Score(double value);

  double value() const noexcept { return value_; }

  auto operator<=>(const Score&) const = default;

 private:
  double value_;
};

// Degree of membership in [0, 1].
class MembershipGrade {
 public:
  explicit MembershipGrade(double value);

  double value() const noexcept { return value_; }

  auto operator<=>(const MembershipGrade&) const = default;

 private:
  double value_;
};

// Ramp / plateau / cutoff curve:
//   0                    for x < rise_start
//   (x - a) / (b - a)    for rise_start <= x <= rise_end
//   1                    for rise_end < x <= cutoff
//   0                    for x > cutoff
// A missing cutoff means the plateau extends to the end of the scale.
class MembershipFunction {
 public:
  MembershipFunction(double rise_start, double rise_end,
                     std::optional<double> cutoff = std::nullopt);

  double rise_start() const noexcept { return rise_start_; }
  double rise_end() const noexcept { return rise_end_; }
  // +infinity when unbounded.
  double cutoff() const noexcept { return cutoff_; }
  bool has_cutoff() const noexcept {
    return cutoff_ != std::numeric_limits<double>::infinity();
  }

  MembershipGrade Evaluate(Score x) const;

  bool operator==(const MembershipFunction&) const = default;

 private:
  double rise_start_;
  double rise_end_;
  double cutoff_;
};

inline MembershipGrade EvaluateMembership(const MembershipFunction& mf,
                                          Score x) {
  return mf.Evaluate(x);
}

inline constexpr std::string_view kPresetPrintedEq3 = "printed-eq3";
inline constexpr std::string_view kPresetTable1Fitted = "table1-fitted";
inline constexpr std::string_view kPresetCustom = "custom";
inline constexpr std::string_view kDefaultPreset = kPresetTable1Fitted;

// Ordered collection of labelled membership functions. Labels are matched
// case-insensitively and must be unique.
class CategorySet {
 public:
  using Entry = std::pair<std::string, MembershipFunction>;

  CategorySet(std::vector<Entry> entries, std::string preset_name);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::string& preset_name() const noexcept { return preset_name_; }

  const MembershipFunction* Find(std::string_view label) const;
  // Throws UnknownCategory.
  const MembershipFunction& At(std::string_view label) const;
  bool Contains(std::string_view label) const { return Find(label) != nullptr; }

  // Returns a copy with `label` added or replaced. The result is named
  // "custom" unless it still equals the preset it started from.
  CategorySet WithEntry(std::string label, MembershipFunction mf) const;

  bool operator==(const CategorySet&) const = default;

 private:
  std::vector<Entry> entries_;
  std::string preset_name_;
  std::vector<std::string> keys_;  // normalized labels, parallel to entries_
};

struct CategoryGrade {
  std::string label;
  MembershipGrade grade;
};

// One grade per category, in category-set order.
std::vector<CategoryGrade> CategoryGrades(const CategorySet& categories,
                                          Score x);

// "printed-eq3" or "table1-fitted"; anything else throws UnknownPreset.
CategorySet PresetCategorySet(std::string_view name);
std::vector<std::string_view> PresetNames();

struct SamplePoint {
  double x;
  double grade;
};

// `count` evenly spaced points over [x_min, x_max], both ends included.
std::vector<SamplePoint> SampleMembership(const MembershipFunction& mf,
                                          Score x_min, Score x_max, int count);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_FUZZY_H_
