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

#include "lexirank/text.h"

#include "doctest.h"

namespace lexirank {
namespace {

TEST_CASE("split keeps empty fields") {
  auto fields = SplitTabs("a\t\tb");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1].empty());
  CHECK(SplitSpaces("  x  y ").size() == 2);
}

TEST_CASE("numeric parsing rejects trailing text") {
  CHECK(ParseInt("42") == 42);
  CHECK_FALSE(ParseInt("42x"));
  CHECK(ParseUnsigned("ff", 16) == 255u);
  CHECK_FALSE(ParseUnsigned("", 10));
  CHECK(ParseDouble("-0.25") == -0.25);
  CHECK_FALSE(ParseDouble("nan?"));
}

TEST_CASE("score formatting round-trips") {
  for (double value : {0.1, 1.0 / 3.0, -2.5e-17, 123456.789}) {
    CHECK(ParseDouble(FormatScore(value)) == value);
    CHECK(ParseDouble(FormatShortest(value)) == value);
  }
  CHECK(FormatScore(0.5) == "0.5");
}

}  // namespace
}  // namespace lexirank
