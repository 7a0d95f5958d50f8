// Copyright 2026 The hermseq Authors
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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hermseq/sequence_builder.hpp"
#include "hermseq/verify.hpp"

namespace hermseq {
namespace {

TEST(VerifyTest, DefaultSuitePasses) {
  const auto report = run_verification({});
  EXPECT_TRUE(report.all_passed());
  std::set<std::string> groups;
  for (const auto& c : report.checks) groups.insert(c.group);
  EXPECT_EQ(groups, (std::set<std::string>{"field", "curve", "sequence", "oracle", "theorem", "remarks"}));
  std::ostringstream os;
  print_report(report, os);
  EXPECT_NE(os.str().find(std::to_string(report.checks.size()) + "/" + std::to_string(report.checks.size())),
            std::string::npos);
}

TEST(VerifyTest, StructuralSuiteAtQ4AndQ5) {
  VerifyOptions options;
  options.qs = {4, 5};
  options.theorem_max_q = 0;
  const auto report = run_verification(options);
  EXPECT_TRUE(report.all_passed());
  EXPECT_GT(report.checks.size(), 20u);
}

TEST(VerifyTest, EveryInjectedCorruptionIsCaught) {
  const FieldCtx ctx = FieldCtx::create(3, 1);
  const auto s = build_sequence(ctx, ctx.epsilon(), 3);
  for (std::size_t pos = 1; pos <= s.size(); pos += 4) {
    const std::uint32_t other = (s.terms[pos - 1].index() + 1) % ctx.order();
    VerifyOptions options;
    options.qs = {3};
    options.corruption = InjectedCorruption{3, 3, pos, other};
    const auto report = run_verification(options);
    EXPECT_FALSE(report.all_passed()) << "position " << pos;
    bool theorem_failed = false;
    for (const auto& c : report.checks) theorem_failed |= !c.passed && c.group == "theorem";
    EXPECT_TRUE(theorem_failed);
  }
}

TEST(VerifyTest, NonPrimePowerIsReportedNotThrown) {
  VerifyOptions options;
  options.qs = {6};
  const auto report = run_verification(options);
  EXPECT_EQ(report.failures(), 1u);
}

}  // namespace
}  // namespace hermseq
