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

#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "careerfuzz/error.h"
#include "careerfuzz/fuzzy.h"
#include "careerfuzz/inference.h"
#include "careerfuzz/io.h"
#include "careerfuzz/relation.h"
#include "careerfuzz/rule_dsl.h"

namespace careerfuzz::cli {

namespace {

// Parse failures are reported as diagnostics, then surfaced as this.
struct ReportedFailure {
  int exit_code;
};

Rulebook LoadRules(const std::string& path, std::ostream& err) {
  const std::string text = ReadTextFile(path);
  ParseResult parsed = ParseRulebook(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) {
      err << FormatParseDiagnostic(d, path) << "\n";
    }
    throw ReportedFailure{kExitInvalid};
  }
  return std::move(*parsed.rulebook);
}

RenderMode ModeOf(const std::string& format) {
  return format == "json" ? RenderMode::kJson : RenderMode::kText;
}

unsigned DefaultThreads() {
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

void PrintDiagnostics(const std::vector<Diagnostic>& diagnostics,
                      const std::string& source, std::ostream& out) {
  for (const auto& d : diagnostics) {
    out << source << ": " << SeverityName(d.severity) << ": " << d.code << ": "
        << d.message << "\n";
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fuzzy career assessment and course/institute/job recommendation",
               "careerfuzz"};
  app.require_subcommand(1);

  std::string rules_path;
  std::string profiles_path;
  std::string kb_path;
  std::string field;
  std::string region;
  std::string format = "text";
  std::string category;
  std::string out_path;
  int samples = 201;
  unsigned threads = DefaultThreads();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Assess student profiles against a rulebook");
  analyze->add_option("--rules", rules_path, "Rulebook (.frules)")->required();
  analyze->add_option("--profiles", profiles_path, "Profiles (JSON)")->required();
  analyze->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(analyze);

  CLI::App* recommend = app.add_subcommand("recommend", "Courses, institutes and jobs for a field");
  recommend->add_option("--kb", kb_path, "Knowledge base (JSON)")->required();
  recommend->add_option("--field", field, "Career field")->required();
  recommend->add_option("--region", region, "Only institutes in this region");
  add_format(recommend);

  CLI::App* pipeline = app.add_subcommand("pipeline", "Assess profiles, then recommend for each top field");
  pipeline->add_option("--rules", rules_path, "Rulebook (.frules)")->required();
  pipeline->add_option("--profiles", profiles_path, "Profiles (JSON)")->required();
  pipeline->add_option("--kb", kb_path, "Knowledge base (JSON)")->required();
  pipeline->add_option("--region", region, "Only institutes in this region");
  pipeline->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(pipeline);

  CLI::App* validate = app.add_subcommand("validate", "List diagnostics for a rulebook or knowledge base");
  auto* validate_rules = validate->add_option("--rules", rules_path, "Rulebook (.frules)");
  auto* validate_kb = validate->add_option("--kb", kb_path, "Knowledge base (JSON)");
  validate_rules->excludes(validate_kb);
  validate_kb->excludes(validate_rules);
  validate->require_option(1);

  CLI::App* plot = app.add_subcommand("plot", "Sample a membership function as CSV");
  plot->add_option("--rules", rules_path, "Rulebook (.frules)")->required();
  plot->add_option("--category", category, "Category label")->required();
  plot->add_option("--out", out_path, "Output CSV path, or - for stdout")->required();
  plot->add_option("--samples", samples, "Number of samples over [0, 100]");

  CLI::App* format_cmd = app.add_subcommand("format", "Print a rulebook in canonical form");
  format_cmd->add_option("--rules", rules_path, "Rulebook (.frules); builtin rules when omitted");

  std::vector<const char*> argv{"careerfuzz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "careerfuzz: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::optional<std::string_view> region_filter =
      region.empty() ? std::nullopt : std::optional<std::string_view>(region);

  try {
    if (analyze->parsed()) {
      const Rulebook rulebook = LoadRules(rules_path, err);
      const std::vector<Profile> profiles = LoadProfiles(profiles_path);
      RenderReport(BuildReport(rulebook, profiles, nullptr, std::nullopt, threads),
                   ModeOf(format), out);
      return kExitOk;
    }
    if (recommend->parsed()) {
      const KnowledgeBase kb = LoadKnowledgeBase(kb_path);
      RenderRecommendation(Recommend(kb, field, region_filter), ModeOf(format), out);
      return kExitOk;
    }
    if (pipeline->parsed()) {
      const Rulebook rulebook = LoadRules(rules_path, err);
      const std::vector<Profile> profiles = LoadProfiles(profiles_path);
      const KnowledgeBase kb = LoadKnowledgeBase(kb_path);
      RenderReport(BuildReport(rulebook, profiles, &kb, region_filter, threads),
                   ModeOf(format), out);
      return kExitOk;
    }
    if (validate->parsed()) {
      if (!rules_path.empty()) {
        const ParseResult parsed = ParseRulebook(ReadTextFile(rules_path));
        for (const auto& d : parsed.diagnostics) {
          out << FormatParseDiagnostic(d, rules_path) << "\n";
        }
        if (!parsed.ok()) return kExitInvalid;
        out << rules_path << ": ok: " << parsed.rulebook->rules.size() << " rules in "
            << parsed.rulebook->FieldNames().size() << " fields\n";
        return kExitOk;
      }
      const KnowledgeBase kb = ParseKnowledgeBase(ReadTextFile(kb_path), false);
      const std::vector<Diagnostic> diagnostics = ValidateKnowledgeBase(kb);
      PrintDiagnostics(diagnostics, kb_path, out);
      if (HasErrors(diagnostics)) return kExitInvalid;
      out << kb_path << ": ok\n";
      return kExitOk;
    }
    if (plot->parsed()) {
      const Rulebook rulebook = LoadRules(rules_path, err);
      const MembershipFunction& mf = rulebook.categories.At(category);
      const std::vector<SamplePoint> points =
          SampleMembership(mf, Score(0), Score(100), samples);
      if (out_path == "-") {
        WriteSamplesCsv(points, out);
      } else {
        std::ostringstream csv;
        WriteSamplesCsv(points, csv);
        WriteTextFile(out_path, csv.str());
      }
      return kExitOk;
    }
    if (format_cmd->parsed()) {
      const Rulebook rulebook =
          rules_path.empty() ? BuiltinRulebook() : LoadRules(rules_path, err);
      out << FormatRulebook(rulebook);
      return kExitOk;
    }
  } catch (const ReportedFailure& failure) {
    return failure.exit_code;
  } catch (const Error& e) {
    err << "careerfuzz: " << e.what() << "\n";
    return e.code() == ErrorCode::kIoError ? kExitUsage : kExitInvalid;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace careerfuzz::cli
