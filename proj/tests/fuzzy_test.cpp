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
#include <limits>

#include "careerfuzz/error.h"
#include "careerfuzz/text.h"
#include "gtest/gtest.h"
#include "support/test_support.h"

namespace careerfuzz {
namespace {

double Eval(const MembershipFunction& mf, double x) {
  return mf.Evaluate(Score(x)).value();
}

TEST(ScoreTest, RejectsOutOfScale) {
  EXPECT_NO_THROW(Score(0));
  EXPECT_NO_THROW(Score(100));
  for (double bad : {-0.5, 100.01, std::numeric_limits<double>::quiet_NaN()}) {
    try {
      Score s(bad);
      FAIL() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kScoreOutOfRange);
    }
  }
}

TEST(MembershipFunctionTest, RejectsDegenerateShapes) {
  EXPECT_THROW(MembershipFunction(55, 55), Error);
  EXPECT_THROW(MembershipFunction(60, 55), Error);
  EXPECT_THROW(MembershipFunction(40, 55, 50), Error);
  EXPECT_THROW(MembershipFunction(-1, 55), Error);
  EXPECT_NO_THROW(MembershipFunction(40, 55, 55));
}

TEST(MembershipFunctionTest, WorkedExamples) {
  const CategorySet fitted = PresetCategorySet(kPresetTable1Fitted);
  const CategorySet printed = PresetCategorySet(kPresetPrintedEq3);
  EXPECT_NEAR(Eval(fitted.At("Good"), 65), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(FormatFixed2(Eval(fitted.At("Good"), 65)), "0.67");
  EXPECT_EQ(Eval(fitted.At("Average"), 40), 0.0);
  EXPECT_NEAR(Eval(fitted.At("Excellent"), 82), 0.80, 1e-15);
  EXPECT_NEAR(Eval(printed.At("Excellent"), 82), 0.60, 1e-15);
}

TEST(MembershipFunctionTest, EndpointSemantics) {
  const MembershipFunction good(55, 70, 75);
  EXPECT_EQ(Eval(good, 54.999), 0.0);
  EXPECT_EQ(Eval(good, 55), 0.0);
  EXPECT_EQ(Eval(good, 70), 1.0);
  EXPECT_EQ(Eval(good, 70.5), 1.0);
  EXPECT_EQ(Eval(good, 75), 1.0);
  EXPECT_EQ(Eval(good, 75.0001), 0.0);
  const MembershipFunction open(70, 85);
  EXPECT_FALSE(open.has_cutoff());
  EXPECT_EQ(Eval(open, 100), 1.0);
}

TEST(CategoryGradesTest, Table1Rows) {
  const CategorySet cs = PresetCategorySet(kPresetTable1Fitted);
  auto grades = CategoryGrades(cs, Score(72));
  ASSERT_EQ(grades.size(), 3u);
  EXPECT_EQ(grades[0].label, "Average");
  EXPECT_EQ(grades[0].grade.value(), 0.0);
  EXPECT_EQ(grades[1].grade.value(), 1.0);
  EXPECT_NEAR(grades[2].grade.value(), 2.0 / 15.0, 1e-15);

  for (const auto& g : CategoryGrades(cs, Score(0))) EXPECT_EQ(g.grade.value(), 0.0);

  grades = CategoryGrades(cs, Score(55));
  EXPECT_EQ(grades[0].grade.value(), 1.0);
  EXPECT_EQ(grades[1].grade.value(), 0.0);
  EXPECT_EQ(grades[2].grade.value(), 0.0);
}

TEST(CategoryGradesTest, GapBetweenSupportsIsAllZero) {
  for (const auto& g : CategoryGrades(PresetCategorySet(kPresetTable1Fitted), Score(35))) {
    EXPECT_EQ(g.grade.value(), 0.0) << g.label;
  }
}

TEST(PresetTest, KnownPresets) {
  EXPECT_EQ(PresetCategorySet("printed-eq3").At("Excellent").rise_end(), 90.0);
  EXPECT_EQ(PresetCategorySet("table1-fitted").At("Excellent").rise_end(), 85.0);
  EXPECT_EQ(PresetCategorySet("TABLE1-FITTED").preset_name(), "table1-fitted");
  EXPECT_EQ(PresetCategorySet("printed-eq3").At("average"), MembershipFunction(40, 55, 60));
}

TEST(PresetTest, UnknownPresetNamesTheValidOnes) {
  try {
    PresetCategorySet("bogus");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownPreset);
    EXPECT_NE(std::string(e.what()).find("printed-eq3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("table1-fitted"), std::string::npos);
  }
}

TEST(CategorySetTest, LabelsAreUniqueIgnoringCase) {
  EXPECT_THROW(CategorySet({{"Good", MembershipFunction(1, 2)},
                            {"good", MembershipFunction(3, 4)}},
                           "custom"),
               Error);
  EXPECT_THROW(CategorySet({}, "custom"), Error);
}

TEST(CategorySetTest, WithEntryTracksPresetIdentity) {
  const CategorySet preset = PresetCategorySet(kPresetTable1Fitted);
  CategorySet changed = preset.WithEntry("Poor", MembershipFunction(0, 20, 40));
  EXPECT_EQ(changed.preset_name(), "custom");
  EXPECT_EQ(changed.entries().size(), 4u);
  CategorySet same = preset.WithEntry("Excellent", MembershipFunction(70, 85));
  EXPECT_EQ(same.preset_name(), "table1-fitted");
  EXPECT_EQ(same, preset);
  EXPECT_THROW(preset.At("Poor"), Error);
}

TEST(SampleTest, Examples) {
  const MembershipFunction average(40, 55, 60);
  auto pts = SampleMembership(average, Score(40), Score(60), 3);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].x, 40);
  EXPECT_EQ(pts[0].grade, 0);
  EXPECT_EQ(pts[1].x, 50);
  EXPECT_NEAR(pts[1].grade, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(pts[2].x, 60);
  EXPECT_EQ(pts[2].grade, 1);

  pts = SampleMembership(average, Score(0), Score(100), 2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].x, 0);
  EXPECT_EQ(pts[1].x, 100);

  for (const auto& p : SampleMembership(MembershipFunction(55, 70, 75), Score(76), Score(100), 17)) {
    EXPECT_EQ(p.grade, 0);
  }
}

TEST(SampleTest, InvalidRanges) {
  const MembershipFunction mf(40, 55, 60);
  EXPECT_THROW(SampleMembership(mf, Score(0), Score(100), 1), Error);
  EXPECT_THROW(SampleMembership(mf, Score(50), Score(50), 5), Error);
  EXPECT_THROW(SampleMembership(mf, Score(60), Score(50), 5), Error);
}

TEST(MembershipPropertyTest, BoundsPlateauAnnihilationMonotoneRamp) {
  testing_support::Rng rng(7);
  for (int i = 0; i < 5000; ++i) {
    const MembershipFunction mf = testing_support::RandomMembershipFunction(rng);
    const double x = testing_support::Uniform(rng, 0, 100);
    const double g = Eval(mf, x);
    ASSERT_GE(g, 0.0);
    ASSERT_LE(g, 1.0);
    if (x > mf.rise_end() && x <= mf.cutoff()) ASSERT_EQ(g, 1.0);
    if (x > mf.cutoff()) ASSERT_EQ(g, 0.0);
    if (x < mf.rise_start()) ASSERT_EQ(g, 0.0);

    const double y = testing_support::Uniform(rng, mf.rise_start(), mf.rise_end());
    const double z = testing_support::Uniform(rng, y, mf.rise_end());
    ASSERT_LE(Eval(mf, y), Eval(mf, z));
  }
}

TEST(RoundingTest, HalfAwayFromZero) {
  EXPECT_EQ(Round2(0.125), 0.13);
  EXPECT_EQ(Round2(0.12499999999999999), 0.13);
  EXPECT_EQ(Round2(0.1249), 0.12);
  EXPECT_EQ(Round2(-0.125), -0.13);
  EXPECT_EQ(FormatFixed2(1.0 / 3.0), "0.33");
  EXPECT_EQ(FormatFixed2(0.0), "0.00");
  EXPECT_EQ(FormatShortest(0.35), "0.35");
}

}  // namespace
}  // namespace careerfuzz
