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

#ifndef CAREERFUZZ_RULE_DSL_H_
#define CAREERFUZZ_RULE_DSL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "careerfuzz/error.h"
#include "careerfuzz/inference.h"

namespace careerfuzz {

// Rulebook text format (.frules). Keywords are case-insensitive, `#` starts
// a line comment and names containing spaces are written in double quotes.
//
//   rulebook        := categories_decl category_decl* field_block+
//   categories_decl := "categories" IDENT
//   category_decl   := "category" IDENT "ramp" NUMBER NUMBER
//                      "cutoff" (NUMBER | "none")
//   field_block     := "field" IDENT "{" rule+ "}"
//   rule            := "rule" IDENT ":" "if" clause ("and" clause)*
//                      "then" IDENT
//   clause          := IDENT "is" IDENT "weight" NUMBER
//   NUMBER          := DECIMAL | INT "/" INT
//
// `categories custom` starts from an empty set; naming a preset starts from
// that preset, and `category` lines add or replace entries.

struct SourceSpan {
  int line = 1;      // 1-based
  int column = 1;    // 1-based, in bytes
  size_t length = 0;
  size_t offset = 0; // byte offset into the source text

  bool operator==(const SourceSpan&) const = default;
};

struct ParseDiagnostic {
  Severity severity = Severity::kError;
  std::string message;
  SourceSpan span;
};

std::string FormatParseDiagnostic(const ParseDiagnostic& diagnostic,
                                  std::string_view source_name = "");

struct ParseResult {
  // Set only when `diagnostics` holds no errors.
  std::optional<Rulebook> rulebook;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return rulebook.has_value(); }
};

ParseResult ParseRulebook(std::string_view text);

// Canonical text. Weights within 1e-9 of a fraction with denominator <= 12
// print as that fraction, everything else as the shortest exact decimal.
std::string FormatRulebook(const Rulebook& rulebook);

std::string FormatWeight(double weight);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_RULE_DSL_H_
