// Copyright 2026 The fairgame Authors.
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

#include "fairgame/rational.h"

#include <gtest/gtest.h>

#include <stdexcept>

namespace fairgame {
namespace {

TEST(RationalTest, LowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(RationalTest, ParseRejectsDecimals) {
  EXPECT_EQ(Rational::Parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::Parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::Parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("a/b"), std::invalid_argument);
}

TEST(RationalTest, OrderingAndDivision) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Max(Rational(1), Rational(3, 2)), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Abs(Rational(-2, 3)), Rational(2, 3));
}

}  // namespace
}  // namespace fairgame
