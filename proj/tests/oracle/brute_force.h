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

// Independent evaluators used to check the engine. Nothing here calls into
// the careerfuzz membership or inference code: membership curves, rule
// coefficients and the relation product are all written out separately.

#ifndef CAREERFUZZ_TESTS_ORACLE_BRUTE_FORCE_H_
#define CAREERFUZZ_TESTS_ORACLE_BRUTE_FORCE_H_

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

// Average, Good and Excellent as piecewise formulas. `excellent_top` is 85
// for the table-fitted curve and 90 for the curve as printed.
inline double Average(double x) {
  if (x >= 40 && x <= 55) return (x - 40) / 15;
  if (x > 55 && x <= 60) return 1;
  return 0;
}

inline double Good(double x) {
  if (x >= 55 && x <= 70) return (x - 55) / 15;
  if (x > 70 && x <= 75) return 1;
  return 0;
}

inline double Excellent(double x, double excellent_top = 85) {
  if (x >= 70 && x <= excellent_top) return (x - 70) / (excellent_top - 70);
  if (x > excellent_top) return 1;
  return 0;
}

inline double Grade(char category, double x) {
  switch (category) {
    case 'a': return Average(x);
    case 'g': return Good(x);
    case 'e': return Excellent(x);
  }
  return -1;
}

// Marks from the first table, keyed by short subject code.
struct Marks {
  double m, p, c, b, hs, hh;
};

inline const std::array<Marks, 3>& Table1Marks() {
  static const std::array<Marks, 3> marks{{
      {82, 85, 86, 65, 56, 60},
      {63, 72, 70, 79, 60, 58},
      {53, 55, 56, 59, 72, 76},
  }};
  return marks;
}

struct Term {
  double Marks::*subject;
  char category;
  double weight;
};

struct CellRule {
  const char* field;
  const char* category;
  const char* column;
  std::vector<Term> terms;
};

// The 28 rules transcribed as coefficient rows, labelled with the column
// letters of the second table.
inline const std::vector<CellRule>& CellRules() {
  using M = Marks;
  const double t = 1.0 / 3.0;
  static const std::vector<CellRule> rules = {
      {"Engineering", "Excellent", "A", {{&M::m, 'e', t}, {&M::p, 'e', t}, {&M::c, 'e', t}}},
      {"Engineering", "Excellent", "B", {{&M::m, 'e', .4}, {&M::p, 'e', .4}, {&M::c, 'g', .2}}},
      {"Engineering", "Excellent", "C", {{&M::m, 'e', .4}, {&M::p, 'g', .2}, {&M::c, 'e', .4}}},
      {"Engineering", "Excellent", "D", {{&M::m, 'g', .2}, {&M::p, 'e', .4}, {&M::c, 'e', .4}}},
      {"Engineering", "Good", "E", {{&M::m, 'e', .4}, {&M::p, 'g', .3}, {&M::c, 'g', .3}}},
      {"Engineering", "Good", "F", {{&M::m, 'g', .3}, {&M::p, 'e', .4}, {&M::c, 'g', .3}}},
      {"Engineering", "Good", "G", {{&M::m, 'g', .3}, {&M::p, 'g', .3}, {&M::c, 'e', .4}}},
      {"Engineering", "Good", "H", {{&M::m, 'g', t}, {&M::p, 'g', t}, {&M::c, 'g', t}}},
      {"Engineering", "Good", "I", {{&M::m, 'e', .4}, {&M::p, 'g', .35}, {&M::c, 'a', .25}}},
      {"Engineering", "Good", "J", {{&M::m, 'g', .35}, {&M::p, 'e', .4}, {&M::c, 'a', .25}}},
      {"Engineering", "Good", "K", {{&M::m, 'g', .4}, {&M::p, 'g', .4}, {&M::c, 'a', .2}}},
      {"Medical", "Excellent", "A", {{&M::b, 'e', t}, {&M::p, 'e', t}, {&M::c, 'e', t}}},
      {"Medical", "Excellent", "B", {{&M::b, 'e', .4}, {&M::p, 'e', .4}, {&M::c, 'g', .2}}},
      {"Medical", "Excellent", "C", {{&M::b, 'e', .4}, {&M::p, 'g', .2}, {&M::c, 'e', .4}}},
      {"Medical", "Excellent", "D", {{&M::b, 'g', .2}, {&M::p, 'e', .4}, {&M::c, 'e', .4}}},
      {"Medical", "Good", "E", {{&M::b, 'e', .4}, {&M::p, 'g', .3}, {&M::c, 'g', .3}}},
      {"Medical", "Good", "F", {{&M::b, 'g', .3}, {&M::p, 'e', .4}, {&M::c, 'g', .3}}},
      {"Medical", "Good", "G", {{&M::b, 'g', .3}, {&M::p, 'g', .3}, {&M::c, 'e', .4}}},
      {"Medical", "Good", "H", {{&M::b, 'g', t}, {&M::p, 'g', t}, {&M::c, 'g', t}}},
      {"Medical", "Good", "I", {{&M::b, 'g', .4}, {&M::p, 'g', .4}, {&M::c, 'a', .2}}},
      {"Medical", "Good", "J", {{&M::b, 'g', .4}, {&M::p, 'a', .2}, {&M::c, 'g', .4}}},
      {"Medical", "Good", "K", {{&M::b, 'a', .2}, {&M::p, 'g', .4}, {&M::c, 'g', .4}}},
      {"Hospitality", "Excellent", "A", {{&M::hs, 'e', .5}, {&M::hh, 'e', .5}}},
      {"Hospitality", "Excellent", "B", {{&M::hs, 'e', .7}, {&M::hh, 'g', .3}}},
      {"Hospitality", "Excellent", "C", {{&M::hs, 'g', .3}, {&M::hh, 'e', .7}}},
      {"Hospitality", "Good", "D", {{&M::hs, 'g', .5}, {&M::hh, 'g', .5}}},
      {"Hospitality", "Good", "E", {{&M::hs, 'g', .7}, {&M::hh, 'a', .3}}},
      {"Hospitality", "Good", "F", {{&M::hs, 'a', .3}, {&M::hh, 'g', .7}}},
  };
  return rules;
}

// (student, field, category, column) where column is a letter or "final".
using CellKey = std::tuple<int, std::string, std::string, std::string>;

// Every cell of the second table recomputed from the first table's marks.
inline std::map<CellKey, double> RecomputeTable2() {
  std::map<CellKey, double> cells;
  std::map<std::tuple<int, std::string, std::string>, std::pair<double, int>> sums;
  for (int s = 0; s < 3; ++s) {
    const Marks& marks = Table1Marks()[s];
    for (const CellRule& rule : CellRules()) {
      double value = 0;
      for (const Term& term : rule.terms) {
        value += term.weight * Grade(term.category, marks.*term.subject);
      }
      cells[{s + 1, rule.field, rule.category, rule.column}] = value;
      auto& [sum, count] = sums[{s + 1, rule.field, rule.category}];
      sum += value;
      ++count;
    }
  }
  for (const auto& [key, acc] : sums) {
    const auto& [student, field, category] = key;
    cells[{student, field, category, "final"}] = acc.first / acc.second;
  }
  return cells;
}

// Half-away-from-zero rounding to two decimals, tolerant of binary noise.
inline double Round2(double v) {
  double scaled = v * 100;
  double whole = scaled < 0 ? -scaled : scaled;
  double floor_part = static_cast<double>(static_cast<long long>(whole));
  double r = (whole - floor_part + 1e-9 >= 0.5) ? floor_part + 1 : floor_part;
  return (scaled < 0 ? -r : r) / 100;
}

// Boolean-matrix product over index sets: out[i][k] = OR_j a[i][j] && b[j][k].
inline std::vector<std::vector<bool>> BoolProduct(
    const std::vector<std::vector<bool>>& a,
    const std::vector<std::vector<bool>>& b, size_t p) {
  const size_t n = a.size();
  const size_t m = b.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(p, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < p; ++k)
        if (a[i][j] && b[j][k]) out[i][k] = true;
  return out;
}

struct RampSpec {
  std::string label;
  double a, b, c;  // c may be +infinity
};

inline std::string Lower(const std::string& s) {
  std::string out;
  for (char ch : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return out;
}

inline double Ramp(const RampSpec& r, double x) {
  if (x >= r.a && x <= r.b) return (x - r.a) / (r.b - r.a);
  if (x > r.b && x <= r.c) return 1;
  return 0;
}

struct OracleClause {
  std::string subject;
  std::string category;
  double weight;
};

// Direct weighted sum for one rule; subjects and labels matched by
// lowercase name.
inline double RuleValue(const std::vector<OracleClause>& clauses,
                        const std::map<std::string, double>& scores,
                        const std::vector<RampSpec>& ramps) {
  double total = 0;
  for (const auto& clause : clauses) {
    double x = scores.at(Lower(clause.subject));
    for (const auto& r : ramps) {
      if (Lower(r.label) == Lower(clause.category)) total += clause.weight * Ramp(r, x);
    }
  }
  return total;
}

}  // namespace oracle

#endif  // CAREERFUZZ_TESTS_ORACLE_BRUTE_FORCE_H_
