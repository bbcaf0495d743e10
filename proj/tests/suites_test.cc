// Copyright 2026 The dicrit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <algorithm>

#include "dicrit/constructions.h"
#include "dicrit/lab.h"

namespace dicrit {
namespace {

Verdict RunSuite(const std::string& id, int max_n = -1, int jobs = 1) {
  return Verify(id, SuiteOptions{max_n, jobs});
}

TEST(SuitesTest, EveryPositiveSuiteHasANegativeControl) {
  const std::vector<std::string> ids = SuiteIds();
  for (const std::string& id : ids) {
    if (id.ends_with("-weakened")) continue;
    EXPECT_NE(std::find(ids.begin(), ids.end(), id + "-weakened"), ids.end()) << id;
  }
  EXPECT_THROW(Verify("T9.9"), std::invalid_argument);
}

TEST(SuitesTest, SpindleSuites) {
  const Verdict v = RunSuite("T6.2", 5);
  EXPECT_EQ(v.outcome, Outcome::kPass);
  EXPECT_GT(v.checked, 0);
  EXPECT_EQ(v.witnesses, v.checked);
  EXPECT_EQ(v.invalid_witnesses, 0);

  const Verdict weak = RunSuite("T6.2-weakened", 3);
  ASSERT_EQ(weak.outcome, Outcome::kFail);
  ASSERT_TRUE(weak.counterexample.has_value());
  EXPECT_EQ(CanonicalForm(weak.counterexample->digraph), CanonicalForm(DirectedCycle(3)));
}

TEST(SuitesTest, SmallSuitesPass) {
  for (const char* id : {"T6.3", "T3.2", "L3.1", "P2.3", "S7", "ARCSTRONG", "B81"}) {
    const Verdict v = RunSuite(id);
    EXPECT_EQ(v.outcome, Outcome::kPass) << VerdictLine(v) << " " << v.violation;
    EXPECT_EQ(v.invalid_witnesses, 0) << id;
  }
}

TEST(SuitesTest, NegativeControlsFailAndReplay) {
  for (const std::string& id : SuiteIds()) {
    if (!id.ends_with("-weakened")) continue;
    const Verdict v = RunSuite(id);
    ASSERT_EQ(v.outcome, Outcome::kFail) << id;
    ASSERT_TRUE(v.counterexample.has_value()) << id;
    EXPECT_FALSE(v.violation.empty());
    const auto again = Replay(id, *v.counterexample);
    ASSERT_TRUE(again.has_value()) << id;
    EXPECT_EQ(*again, v.violation) << id;
  }
}

TEST(SuitesTest, CirculantLogsMeasuredDigirth) {
  const Verdict v = RunSuite("S7");
  ASSERT_EQ(v.outcome, Outcome::kPass);
  ASSERT_FALSE(v.log.empty());
  bool saw = false;
  for (const std::string& line : v.log) saw |= line.find("digirth") != std::string::npos;
  EXPECT_TRUE(saw);
}

TEST(SuitesTest, JobsIndependent) {
  for (const char* id : {"T6.2-weakened", "ARCSTRONG-weakened", "T6.4-weakened"}) {
    const Verdict a = RunSuite(id, -1, 1);
    const Verdict b = RunSuite(id, -1, 3);
    EXPECT_EQ(a.outcome, b.outcome) << id;
    EXPECT_EQ(a.checked, b.checked) << id;
    ASSERT_TRUE(a.counterexample && b.counterexample);
    EXPECT_EQ(a.counterexample->digraph, b.counterexample->digraph) << id;
    EXPECT_EQ(a.violation, b.violation) << id;
  }
  const Verdict a = RunSuite("T6.2", 6, 1);
  const Verdict b = RunSuite("T6.2", 6, 4);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.outcome, b.outcome);
}

TEST(SuitesTest, VerdictLine) {
  const Verdict v = RunSuite("P2.3");
  const std::string line = VerdictLine(v);
  EXPECT_EQ(line.rfind("SUITE P2.3 pass checked=64 elapsed=", 0), 0u) << line;
}

TEST(SuitesTest, RefusalPastBudget) {
  const Verdict v = RunSuite("T6.2", kEnumerationBudget + 1);
  EXPECT_EQ(v.outcome, Outcome::kRefused);
  EXPECT_FALSE(v.refusal.empty());
}

}  // namespace
}  // namespace dicrit
