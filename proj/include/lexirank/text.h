// Copyright 2026 The Lexirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small string helpers shared by the file readers.

#ifndef LEXIRANK_TEXT_H_
#define LEXIRANK_TEXT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexirank {

std::vector<std::string_view> Split(std::string_view text, char separator);
std::vector<std::string_view> SplitTabs(std::string_view text);

// Splits on runs of spaces and tabs, dropping empty fields.
std::vector<std::string_view> SplitSpaces(std::string_view text);

std::string_view Trim(std::string_view text);

std::optional<int> ParseInt(std::string_view text);
std::optional<uint64_t> ParseUnsigned(std::string_view text, int base = 10);
std::optional<double> ParseDouble(std::string_view text);

// Fixed 17 significant digits ("%.17g").
std::string FormatScore(double value);

// Shortest representation that parses back to the same double.
std::string FormatShortest(double value);

}  // namespace lexirank

#endif  // LEXIRANK_TEXT_H_
