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

#include "careerfuzz/rule_dsl.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

#include "careerfuzz/text.h"

namespace careerfuzz {

namespace {

enum class TokenKind { kWord, kString, kNumber, kLBrace, kRBrace, kColon, kSlash, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // unescaped for strings
  SourceSpan span;
};

const char* KindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kString: return "quoted name";
    case TokenKind::kNumber: return "number";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

bool IsWordStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsWordChar(char c) {
  return IsWordStart(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseDiagnostic>& diagnostics)
      : text_(text), diagnostics_(diagnostics) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::kEnd, "", Here(0)});
        return tokens;
      }
      const char c = text_[pos_];
      if (c == '{') { tokens.push_back(Single(TokenKind::kLBrace)); continue; }
      if (c == '}') { tokens.push_back(Single(TokenKind::kRBrace)); continue; }
      if (c == ':') { tokens.push_back(Single(TokenKind::kColon)); continue; }
      if (c == '/') { tokens.push_back(Single(TokenKind::kSlash)); continue; }
      if (c == '"') { LexString(tokens); continue; }
      if (IsDigit(c)) { tokens.push_back(LexNumber()); continue; }
      if (IsWordStart(c)) { tokens.push_back(LexWord()); continue; }
      diagnostics_.push_back({Severity::kError,
                              std::string("unexpected character '") + c + "'",
                              Here(1)});
      Advance();
    }
  }

 private:
  SourceSpan Here(size_t length) const {
    return {line_, column_, length, pos_};
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        return;
      }
    }
  }

  Token Single(TokenKind kind) {
    Token t{kind, std::string(1, text_[pos_]), Here(1)};
    Advance();
    return t;
  }

  Token LexWord() {
    SourceSpan span = Here(0);
    const size_t start = pos_;
    while (pos_ < text_.size() && IsWordChar(text_[pos_])) Advance();
    span.length = pos_ - start;
    return {TokenKind::kWord, std::string(text_.substr(start, pos_ - start)), span};
  }

  Token LexNumber() {
    SourceSpan span = Here(0);
    const size_t start = pos_;
    while (pos_ < text_.size() && IsDigit(text_[pos_])) Advance();
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' && IsDigit(text_[pos_ + 1])) {
      Advance();
      while (pos_ < text_.size() && IsDigit(text_[pos_])) Advance();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && IsDigit(text_[look])) {
        while (pos_ < look) Advance();
        while (pos_ < text_.size() && IsDigit(text_[pos_])) Advance();
      }
    }
    span.length = pos_ - start;
    return {TokenKind::kNumber, std::string(text_.substr(start, pos_ - start)), span};
  }

  void LexString(std::vector<Token>& tokens) {
    SourceSpan span = Here(0);
    const size_t start = pos_;
    Advance();
    std::string value;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size() &&
          (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
        Advance();
      }
      value.push_back(text_[pos_]);
      Advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      span.length = pos_ - start;
      diagnostics_.push_back({Severity::kError, "unterminated quoted name", span});
      return;
    }
    Advance();
    span.length = pos_ - start;
    tokens.push_back({TokenKind::kString, std::move(value), span});
  }

  std::string_view text_;
  std::vector<ParseDiagnostic>& diagnostics_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Thrown inside the parser to unwind to the nearest recovery point.
struct SyntaxError {};

SourceSpan Cover(const SourceSpan& first, const SourceSpan& last) {
  SourceSpan s = first;
  s.length = last.offset + last.length - first.offset;
  return s;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diagnostics)
      : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

  std::optional<Rulebook> Run() {
    ParseCategories();
    while (IsKeyword("category")) {
      try {
        ParseCategoryDecl();
      } catch (const SyntaxError&) {
        SkipTo({"category", "field"});
      }
    }

    bool saw_field = false;
    while (Peek().kind != TokenKind::kEnd) {
      if (!IsKeyword("field")) {
        Error(Peek().span, std::string("expected 'field', found ") + Describe(Peek()));
        Next();
        SkipTo({"field"});
        continue;
      }
      saw_field = true;
      ParseFieldBlock();
    }
    if (!saw_field) {
      Error(Peek().span, "missing field block");
    }

    // Validation also runs over the rules that did parse, so one pass
    // reports semantic problems alongside syntax errors.
    std::optional<CategorySet> categories = BuildCategories();
    if (!categories) return std::nullopt;

    Rulebook rulebook{std::move(*categories), std::move(rules_)};
    for (const Diagnostic& d : ValidateRulebook(rulebook)) {
      SourceSpan span = d.item && *d.item < rule_spans_.size()
                            ? rule_spans_[*d.item]
                            : SourceSpan{};
      diagnostics_.push_back({d.severity, d.code + ": " + d.message, span});
    }
    if (HasError()) return std::nullopt;
    return rulebook;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool IsKeyword(std::string_view keyword, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kWord && EqualsIgnoreCase(t.text, keyword);
  }

  static std::string Describe(const Token& t) {
    if (t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber) {
      return "'" + t.text + "'";
    }
    if (t.kind == TokenKind::kString) return "\"" + t.text + "\"";
    return KindName(t.kind);
  }

  void Error(const SourceSpan& span, std::string message) {
    diagnostics_.push_back({Severity::kError, std::move(message), span});
  }

  bool HasError() const {
    for (const auto& d : diagnostics_) {
      if (d.severity == Severity::kError) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const Token& at, std::string message) {
    Error(at.span, std::move(message));
    throw SyntaxError{};
  }

  const Token& ExpectKeyword(std::string_view keyword) {
    if (!IsKeyword(keyword)) {
      Fail(Peek(), "expected '" + std::string(keyword) + "', found " + Describe(Peek()));
    }
    return Next();
  }

  const Token& Expect(TokenKind kind) {
    if (Peek().kind != kind) {
      Fail(Peek(), std::string("expected ") + KindName(kind) + ", found " +
                       Describe(Peek()));
    }
    return Next();
  }

  const Token& ExpectIdent(std::string_view what) {
    const Token& t = Peek();
    if (t.kind != TokenKind::kWord && t.kind != TokenKind::kString) {
      Fail(t, "expected " + std::string(what) + ", found " + Describe(t));
    }
    if (CollapseWhitespace(t.text).empty()) {
      Fail(t, "empty " + std::string(what));
    }
    return Next();
  }

  double ParseDecimal(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      Fail(t, "invalid number '" + t.text + "'");
    }
    return value;
  }

  // NUMBER := DECIMAL | INT "/" INT
  std::pair<double, SourceSpan> ParseNumber(std::string_view what) {
    const Token& first = Peek();
    if (first.kind != TokenKind::kNumber) {
      Fail(first, "expected " + std::string(what) + ", found " + Describe(first));
    }
    Next();
    if (Peek().kind != TokenKind::kSlash) {
      return {ParseDecimal(first), first.span};
    }
    Next();
    const Token& denom = Peek();
    if (denom.kind != TokenKind::kNumber) {
      Fail(denom, "expected denominator after '/', found " + Describe(denom));
    }
    Next();
    auto is_int = [](const std::string& s) {
      for (char c : s) {
        if (!IsDigit(c)) return false;
      }
      return !s.empty();
    };
    if (!is_int(first.text) || !is_int(denom.text)) {
      Fail(first, "fractions must be written as INT/INT");
    }
    const double numerator = ParseDecimal(first);
    const double denominator = ParseDecimal(denom);
    if (denominator == 0.0) Fail(denom, "division by zero in fraction");
    return {numerator / denominator, Cover(first.span, denom.span)};
  }

  void SkipTo(std::initializer_list<std::string_view> keywords) {
    while (Peek().kind != TokenKind::kEnd) {
      for (auto k : keywords) {
        if (IsKeyword(k)) return;
      }
      Next();
    }
  }

  void ParseCategories() {
    if (!IsKeyword("categories")) {
      Error(Peek().span, "missing categories declaration");
      SkipTo({"category", "field"});
      return;
    }
    Next();
    try {
      const Token& name = ExpectIdent("category preset name");
      if (EqualsIgnoreCase(name.text, kPresetCustom)) {
        preset_ = std::string(kPresetCustom);
      } else {
        try {
          CategorySet preset = PresetCategorySet(name.text);
          preset_ = preset.preset_name();
          entries_ = preset.entries();
        } catch (const careerfuzz::Error& e) {
          Fail(name, e.what());
        }
      }
      have_categories_ = true;
    } catch (const SyntaxError&) {
      SkipTo({"category", "field"});
    }
  }

  void ParseCategoryDecl() {
    const Token& kw = Next();
    const Token& label = ExpectIdent("category name");
    ExpectKeyword("ramp");
    auto [start, start_span] = ParseNumber("ramp start");
    auto [end, end_span] = ParseNumber("ramp end");
    ExpectKeyword("cutoff");
    std::optional<double> cutoff;
    SourceSpan last = Peek().span;
    if (IsKeyword("none")) {
      Next();
    } else {
      auto [c, c_span] = ParseNumber("cutoff");
      cutoff = c;
      last = c_span;
    }
    const SourceSpan span = Cover(kw.span, last);
    std::string key = NormalizeKey(label.text);
    for (const auto& seen : declared_categories_) {
      if (seen == key) {
        Fail(label, "category '" + label.text + "' is declared twice");
      }
    }
    declared_categories_.push_back(key);
    try {
      MembershipFunction mf(start, end, cutoff);
      bool replaced = false;
      for (auto& entry : entries_) {
        if (NormalizeKey(entry.first) == key) {
          entry = {label.text, mf};
          replaced = true;
        }
      }
      if (!replaced) entries_.emplace_back(label.text, mf);
      customized_ = true;
    } catch (const careerfuzz::Error& e) {
      Error(span, e.what());
    }
  }

  std::optional<CategorySet> BuildCategories() {
    if (!have_categories_) return std::nullopt;
    if (entries_.empty()) {
      Error(SourceSpan{}, "custom category set declares no categories");
      return std::nullopt;
    }
    if (preset_ != kPresetCustom && customized_) {
      CategorySet preset = PresetCategorySet(preset_);
      if (preset.entries() == entries_) return preset;
      return CategorySet(entries_, std::string(kPresetCustom));
    }
    return CategorySet(entries_, preset_);
  }

  void ParseFieldBlock() {
    const Token& kw = Next();
    std::string field;
    try {
      field = CollapseWhitespace(ExpectIdent("field name").text);
      Expect(TokenKind::kLBrace);
    } catch (const SyntaxError&) {
      SkipTo({"field"});
      return;
    }
    for (const auto& seen : fields_) {
      if (NormalizeKey(seen) == NormalizeKey(field)) {
        diagnostics_.push_back({Severity::kWarning,
                                "field '" + field + "' is reopened", kw.span});
        break;
      }
    }
    fields_.push_back(field);

    size_t rule_count = 0;
    while (true) {
      const Token& t = Peek();
      if (t.kind == TokenKind::kRBrace) {
        Next();
        break;
      }
      if (t.kind == TokenKind::kEnd) {
        Error(t.span, "unterminated block for field '" + field + "'");
        return;
      }
      if (IsKeyword("field")) {
        Error(t.span, "missing '}' before next field block");
        return;
      }
      if (!IsKeyword("rule")) {
        Error(t.span, "expected 'rule' or '}', found " + Describe(t));
        Next();
        SkipToRuleBoundary();
        continue;
      }
      ++rule_count;
      try {
        ParseRule(field);
      } catch (const SyntaxError&) {
        SkipToRuleBoundary();
      }
    }
    if (rule_count == 0) {
      Error(kw.span, "field '" + field + "' has no rules");
    }
  }

  void SkipToRuleBoundary() {
    while (Peek().kind != TokenKind::kEnd && Peek().kind != TokenKind::kRBrace &&
           !IsKeyword("rule") && !IsKeyword("field")) {
      Next();
    }
  }

  void ParseRule(const std::string& field) {
    const Token& kw = Next();
    Rule rule;
    rule.field = field;
    rule.id = CollapseWhitespace(ExpectIdent("rule id").text);
    Expect(TokenKind::kColon);
    ExpectKeyword("if");
    while (true) {
      const Token& subject = ExpectIdent("subject name");
      ExpectKeyword("is");
      const Token& category = ExpectIdent("category name");
      ExpectKeyword("weight");
      const double weight = ParseNumber("weight").first;
      rule.clauses.push_back(
          {SubjectId(subject.text), CollapseWhitespace(category.text), weight});
      if (IsKeyword("and")) {
        Next();
        continue;
      }
      break;
    }
    ExpectKeyword("then");
    const Token& consequent = ExpectIdent("consequent category");
    rule.consequent = CollapseWhitespace(consequent.text);
    rule_spans_.push_back(Cover(kw.span, consequent.span));
    rules_.push_back(std::move(rule));
  }

  std::vector<Token> tokens_;
  std::vector<ParseDiagnostic>& diagnostics_;
  size_t pos_ = 0;

  bool have_categories_ = false;
  bool customized_ = false;
  std::string preset_;
  std::vector<CategorySet::Entry> entries_;
  std::vector<std::string> declared_categories_;
  std::vector<std::string> fields_;
  std::vector<Rule> rules_;
  std::vector<SourceSpan> rule_spans_;
};

bool IsKeywordText(std::string_view word) {
  static constexpr std::string_view kKeywords[] = {
      "categories", "category", "ramp", "cutoff", "none", "field",
      "rule",       "if",       "and",  "then",   "is",   "weight"};
  for (auto k : kKeywords) {
    if (EqualsIgnoreCase(word, k)) return true;
  }
  return false;
}

std::string FormatIdent(std::string_view name) {
  bool bare = !name.empty() && IsWordStart(name.front()) && !IsKeywordText(name);
  for (char c : name) {
    if (!IsWordChar(c)) bare = false;
  }
  if (bare) return std::string(name);
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string FormatParseDiagnostic(const ParseDiagnostic& d,
                                  std::string_view source_name) {
  std::string out;
  if (!source_name.empty()) out += std::string(source_name) + ":";
  out += std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": ";
  out += std::string(SeverityName(d.severity)) + ": " + d.message;
  return out;
}

ParseResult ParseRulebook(std::string_view text) {
  ParseResult result;
  std::vector<Token> tokens = Lexer(text, result.diagnostics).Run();
  Parser parser(std::move(tokens), result.diagnostics);
  std::optional<Rulebook> rulebook = parser.Run();
  bool has_error = false;
  for (const auto& d : result.diagnostics) {
    if (d.severity == Severity::kError) has_error = true;
  }
  if (!has_error) result.rulebook = std::move(rulebook);
  return result;
}

std::string FormatWeight(double weight) {
  for (int denominator = 1; denominator <= 12; ++denominator) {
    const double numerator = std::round(weight * denominator);
    if (numerator <= 0.0) continue;
    if (std::fabs(weight - numerator / denominator) <= 1e-9) {
      const auto n = static_cast<long long>(numerator);
      if (denominator == 1) return std::to_string(n);
      return std::to_string(n) + "/" + std::to_string(denominator);
    }
  }
  return FormatShortest(weight);
}

std::string FormatRulebook(const Rulebook& rulebook) {
  std::string out;
  const CategorySet& categories = rulebook.categories;
  bool is_preset = false;
  if (categories.preset_name() != kPresetCustom) {
    try {
      is_preset = PresetCategorySet(categories.preset_name()) == categories;
    } catch (const careerfuzz::Error&) {
      is_preset = false;
    }
  }
  if (is_preset) {
    out += "categories " + categories.preset_name() + "\n";
  } else {
    out += "categories custom\n";
    for (const auto& [label, mf] : categories.entries()) {
      out += "category " + FormatIdent(label) + " ramp " +
             FormatShortest(mf.rise_start()) + " " + FormatShortest(mf.rise_end()) +
             " cutoff " + (mf.has_cutoff() ? FormatShortest(mf.cutoff()) : "none") +
             "\n";
    }
  }

  // Consecutive rules of one field share a block; a field that shows up
  // again later gets a second block so rule order survives re-parsing.
  std::string open_key;
  bool open = false;
  for (const Rule& rule : rulebook.rules) {
    const std::string key = NormalizeKey(rule.field);
    if (!open || key != open_key) {
      if (open) out += "}\n";
      out += "\nfield " + FormatIdent(rule.field) + " {\n";
      open_key = key;
      open = true;
    }
    out += "  rule " + FormatIdent(rule.id) + ": if ";
    for (size_t i = 0; i < rule.clauses.size(); ++i) {
      const Clause& c = rule.clauses[i];
      if (i > 0) out += "\n      and ";
      out += FormatIdent(c.subject.name()) + " is " + FormatIdent(c.category) +
             " weight " + FormatWeight(c.weight);
    }
    out += "\n      then " + FormatIdent(rule.consequent) + "\n";
  }
  if (open) out += "}\n";
  return out;
}

}  // namespace careerfuzz
