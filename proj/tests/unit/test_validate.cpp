/**
 * Copyright 2026 The su11 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "su11/validate.hpp"

namespace su11 {
namespace {

TEST(Validate, GridIsSeededAndInsideOracleRegime) {
  const auto a = validation_grid(42, 50);
  const auto b = validation_grid(42, 50);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, validation_grid(43, 50));
  for (const auto& c : a) {
    EXPECT_LE(c.g1, 0.3);
    EXPECT_LE(c.g2, 0.3);
    EXPECT_GE(c.t_s, 0.1);
    EXPECT_GE(c.t_i, 0.1);
    EXPECT_LE(c.n_i, 4.0);
  }
}

TEST(Validate, EmptyGridPasses) {
  const auto r = validate(42, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 5u);
  for (const auto& c : r.checks) EXPECT_EQ(c.evaluated, 0);
}

TEST(Validate, SmallGridAgrees) {
  const auto r = validate(42, 4);
  EXPECT_TRUE(r.passed()) << format_report(r);
  for (const auto& c : r.checks) EXPECT_EQ(c.evaluated, 4);
  EXPECT_LT(r.checks[1].worst, 1e-7);
}

TEST(Validate, SingularPointIsSkipped) {
  const auto r = validate(7, 2, true);
  EXPECT_TRUE(r.passed()) << format_report(r);
  EXPECT_EQ(r.checks.back().skipped, 1);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("undefined visibility"), std::string::npos);
}

TEST(Validate, RejectsOversizedGrid) { EXPECT_THROW(validate(1, 10001), DomainError); }

}  // namespace
}  // namespace su11
