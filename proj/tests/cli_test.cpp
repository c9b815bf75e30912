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

#include "cli.h"

#include <filesystem>
#include <sstream>

#include "careerfuzz/io.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "support/test_support.h"

namespace careerfuzz::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return (testing_support::DataDir() / name).string();
}

class TempFile {
 public:
  TempFile(const std::string& name, std::string_view contents)
      : path_(fs::temp_directory_path() / ("careerfuzz_cli_test_" + name)) {
    WriteTextFile(path_, contents);
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"analyze", "--rules", Data("builtin.frules"), "--profiles", Data("table1_profiles.json"), "--bogus"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"analyze", "--rules", Data("builtin.frules")}).code, kExitUsage);
  EXPECT_EQ(RunCli({"analyze", "--rules", Data("builtin.frules"), "--profiles", Data("table1_profiles.json"), "--format", "xml"}).code,
            kExitUsage);
  const Outcome missing = RunCli({"analyze", "--rules", "/nonexistent/rules.frules", "--profiles", Data("table1_profiles.json")});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("IoError"), std::string::npos);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST(CliTest, DomainErrorsExitOne) {
  const Outcome unknown = RunCli({"recommend", "--kb", Data("sample_kb.json"), "--field", "Astrology"});
  EXPECT_EQ(unknown.code, kExitInvalid);
  EXPECT_NE(unknown.err.find("UnknownField"), std::string::npos);

  TempFile bad_rules("bad.frules", "categories table1-fitted\nfield F {\n  rule r: if Maths is Excellent weight 0.5 then Excellent\n}\n");
  const Outcome bad = RunCli({"analyze", "--rules", bad_rules.path(), "--profiles", Data("table1_profiles.json")});
  EXPECT_EQ(bad.code, kExitInvalid);
  EXPECT_NE(bad.err.find(bad_rules.path() + ":3:3: error: WeightSumViolation"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());

  TempFile bad_profiles("bad_profiles.json", R"({"students": [{"id": "1", "scores": {"Physics": -3}}]})");
  EXPECT_EQ(RunCli({"analyze", "--rules", Data("builtin.frules"), "--profiles", bad_profiles.path()}).code, kExitInvalid);

  TempFile malformed("malformed.json", "{\"students\": [");
  EXPECT_EQ(RunCli({"analyze", "--rules", Data("builtin.frules"), "--profiles", malformed.path()}).code, kExitInvalid);

  EXPECT_EQ(RunCli({"plot", "--rules", Data("builtin.frules"), "--category", "Superb", "--out", "-"}).code, kExitInvalid);
  EXPECT_EQ(RunCli({"plot", "--rules", Data("builtin.frules"), "--category", "Good", "--out", "-", "--samples", "1"}).code,
            kExitInvalid);
}

TEST(CliTest, AnalyzeReportsTable2Finals) {
  const Outcome r = RunCli({"analyze", "--rules", Data("builtin.frules"), "--profiles", Data("table1_profiles.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Excellent   E1 0.93  E2 0.72  E3 0.72  E4 0.80  final 0.79"), std::string::npos);
  EXPECT_NE(r.out.find("1. Engineering  excellent 0.79"), std::string::npos);
  EXPECT_NE(r.out.find("1. Medical  excellent 0.31"), std::string::npos);
  EXPECT_NE(r.out.find("1. Hospitality  excellent 0.31"), std::string::npos);
}

TEST(CliTest, OutputIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> base = {"pipeline", "--rules", Data("builtin.frules"), "--profiles",
                                         Data("table1_profiles.json"), "--kb", Data("sample_kb.json"), "--format", "json"};
  const Outcome first = RunCli(base);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  for (const char* threads : {"1", "2", "7"}) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--threads", threads});
    EXPECT_EQ(RunCli(args).out, first.out);
  }
  const nlohmann::json doc = nlohmann::json::parse(first.out);
  EXPECT_EQ(doc["students"][0]["recommendation"]["field"], "Engineering");
}

TEST(CliTest, RecommendWithRegion) {
  const Outcome r = RunCli({"recommend", "--kb", Data("sample_kb.json"), "--field", "engineering", "--region", "North", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["institutes"], nlohmann::json::array({"Hill Institute of Technology"}));
  EXPECT_EQ(doc["courses"].size(), 2u);
}

TEST(CliTest, PlotAverage) {
  const Outcome r = RunCli({"plot", "--rules", Data("builtin.frules"), "--category", "Average", "--out", "-"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("x,grade\n", 0), 0u);
  for (const char* row : {"\n40,0\n", "\n55,1\n", "\n60,1\n", "\n60.5,0\n", "\n61,0\n"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
  EXPECT_NE(r.out.find("\n100,0\n"), std::string::npos);

  TempFile target("plot.csv", "");
  ASSERT_EQ(RunCli({"plot", "--rules", Data("builtin.frules"), "--category", "Average", "--out", target.path()}).code,
            kExitOk);
  EXPECT_EQ(ReadTextFile(target.path()), r.out);
}

TEST(CliTest, Validate) {
  Outcome r = RunCli({"validate", "--rules", Data("builtin.frules")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("ok: 28 rules in 3 fields"), std::string::npos);
  r = RunCli({"validate", "--kb", Data("sample_kb.json")});
  EXPECT_EQ(r.code, kExitOk);

  TempFile dangling("dangling.json", R"({"fields": ["F"], "courses": [], "R": [["F", "Ghost"]]})");
  r = RunCli({"validate", "--kb", dangling.path()});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.out.find("error: DanglingReference"), std::string::npos);

  TempFile warn("warn.json", R"({"fields": ["F", "G"], "courses": ["C"], "institutes": ["I"], "R": [["F", "C"]], "S": [["C", "I"]]})");
  r = RunCli({"validate", "--kb", warn.path()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("warning: FieldWithoutCourses"), std::string::npos);

  EXPECT_EQ(RunCli({"validate"}).code, kExitUsage);
}

TEST(CliTest, FormatMatchesShippedRules) {
  const Outcome r = RunCli({"format"});
  ASSERT_EQ(r.code, kExitOk);
  const Outcome shipped = RunCli({"format", "--rules", Data("builtin.frules")});
  EXPECT_EQ(r.out, shipped.out);
}

TEST(CliTest, FaultInjectedInputsNeverCrash) {
  const std::string rules = ReadTextFile(Data("builtin.frules"));
  const std::string profiles = ReadTextFile(Data("table1_profiles.json"));
  testing_support::Rng rng(2026);
  for (int iter = 0; iter < 200; ++iter) {
    std::string r = rules;
    std::string p = profiles;
    std::string& victim = iter % 2 ? r : p;
    const size_t pos = testing_support::UniformInt(rng, 0, static_cast<int>(victim.size()) - 1);
    switch (iter % 3) {
      case 0: victim.erase(pos, testing_support::UniformInt(rng, 1, 8)); break;
      case 1: victim.insert(pos, 1, "{}[]:,\"#9x-"[testing_support::UniformInt(rng, 0, 10)]); break;
      default: victim.resize(pos); break;
    }
    TempFile rf("fault.frules", r);
    TempFile pf("fault.json", p);
    const Outcome o = RunCli({"analyze", "--rules", rf.path(), "--profiles", pf.path()});
    ASSERT_TRUE(o.code == kExitOk || o.code == kExitInvalid) << o.err;
    if (o.code != kExitOk) {
      EXPECT_FALSE(o.err.empty());
      EXPECT_TRUE(o.out.empty());
    }
  }
}

}  // namespace
}  // namespace careerfuzz::cli
