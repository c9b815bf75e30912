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

#ifndef CAREERFUZZ_TEXT_H_
#define CAREERFUZZ_TEXT_H_

#include <string>
#include <string_view>

namespace careerfuzz {

// Trims, collapses internal whitespace runs to one space and lowercases
// ASCII letters. Used as the comparison key for labels and subject names.
std::string NormalizeKey(std::string_view text);

// Trims and collapses whitespace but keeps the original casing.
std::string CollapseWhitespace(std::string_view text);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Rounds to two decimals, half away from zero. Values within 1e-9 of a
// half-cent boundary are treated as lying on it, so 0.125 computed as
// 0.12499999999999999 still rounds to 0.13.
double Round2(double value);

// Fixed two-decimal rendering of Round2(value).
std::string FormatFixed2(double value);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatShortest(double value);

}  // namespace careerfuzz

#endif  // CAREERFUZZ_TEXT_H_
