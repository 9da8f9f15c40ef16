// Copyright 2026 The Alibi Authors.
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

#include <gtest/gtest.h>

#include "alibi/consistency.hpp"
#include "test_support.hpp"

namespace alibi {
namespace {

using testing::DataPath;
using testing::FixturePath;
using testing::Slot;

Scenario JohnScenario() { return LoadScenario(DataPath("scenario_john.json")); }
KnowledgeBase RobberyKb() { return LoadKnowledgeBase(DataPath("kb_robbery.json")); }

TEST(Encode, RobberyForbidsOnlyTheBreakIn) {
  auto enc = Encode(JohnScenario(), RobberyKb());
  EXPECT_EQ(enc.problem.num_vars, 3);
  ASSERT_EQ(enc.problem.hard_clauses.size(), 1u);
  EXPECT_EQ(enc.problem.hard_clauses[0], (Clause{-3}));
  EXPECT_EQ(enc.entry_of_var[2], 2u);
  ASSERT_EQ(enc.problem.soft_clauses.size(), 3u);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(enc.problem.soft_clauses[v].weight, 1u);
    EXPECT_EQ(enc.problem.soft_clauses[v].literals, (Clause{v + 1}));
  }
}

TEST(Encode, EmptyKb) {
  auto enc = Encode(JohnScenario(), KnowledgeBase{});
  EXPECT_TRUE(enc.problem.hard_clauses.empty());
  EXPECT_EQ(enc.problem.soft_clauses.size(), 3u);
}

TEST(Encode, OverlapGivesBinaryClause) {
  Scenario s;
  s.subject = testing::John();
  s.entries = {{Slot("work", Day::kMon, 16, 19, "downtown", Participants::kColleagues), {}},
               {Slot("eat-dinner", Day::kMon, 18, 20, "downtown", Participants::kAlone), {}}};
  auto enc = Encode(s, KnowledgeBase{});
  ASSERT_EQ(enc.problem.hard_clauses.size(), 1u);
  EXPECT_EQ(enc.problem.hard_clauses[0], (Clause{-1, -2}));
}

TEST(Encode, WeightsAndPlaceholders) {
  Scenario s = JohnScenario();
  s.entries[0].instance.name = "PH";
  auto enc = Encode(s, RobberyKb(), {1, 5, 2});
  EXPECT_EQ(enc.problem.num_vars, 2);
  EXPECT_EQ(enc.problem.soft_clauses[0].weight, 5u);
  EXPECT_EQ(enc.problem.soft_clauses[1].weight, 2u);
  EXPECT_THROW(Encode(s, RobberyKb(), {1, 0, 1}), Error);
}

TEST(Solve, RobberyCostOne) {
  auto enc = Encode(JohnScenario(), RobberyKb());
  auto a = SolveEncoding(enc);
  EXPECT_EQ(a.cost, 1u);
  EXPECT_TRUE(a.Value(1));
  EXPECT_TRUE(a.Value(2));
  EXPECT_FALSE(a.Value(3));
}

TEST(Solve, UnsatNamesRules) {
  auto kb = LoadKnowledgeBase(FixturePath("kb_unsat.json"));
  auto enc = Encode(JohnScenario(), kb);
  try {
    SolveEncoding(enc);
    FAIL();
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("no consistent repair"), std::string::npos);
    EXPECT_NE(msg.find("no-break-in"), std::string::npos);
    EXPECT_NE(msg.find("keep-sunday-night"), std::string::npos);
  }
}

TEST(Apply, PlaceholderKeepsSlot) {
  auto s = JohnScenario();
  auto enc = Encode(s, RobberyKb());
  auto out = ApplySolution(s, SolveEncoding(enc), enc);
  EXPECT_EQ(out.entries[0], s.entries[0]);
  EXPECT_EQ(out.entries[1], s.entries[1]);
  EXPECT_EQ(out.entries[2].instance, testing::RobberySlot());
}

TEST(Apply, AllTrueIsIdentity) {
  auto s = JohnScenario();
  auto enc = Encode(s, KnowledgeBase{});
  EXPECT_EQ(ApplySolution(s, SolveEncoding(enc), enc), s);
}

TEST(Apply, TwoFalseTwoPlaceholders) {
  auto s = JohnScenario();
  auto enc = Encode(s, KnowledgeBase{});
  Assignment a;
  a.values = {false, false, true, false};
  auto out = ApplySolution(s, a, enc);
  ASSERT_EQ(out.entries.size(), 3u);
  EXPECT_TRUE(out.entries[0].instance.is_placeholder());
  EXPECT_EQ(out.entries[1], s.entries[1]);
  EXPECT_TRUE(out.entries[2].instance.is_placeholder());
  for (std::size_t i : {0u, 2u}) {
    auto want = s.entries[i].instance;
    want.name = "PH";
    EXPECT_EQ(out.entries[i].instance, want);
  }
}

TEST(Verify, RepairedScenarioPasses) {
  auto s = JohnScenario();
  s.entries[2].instance.name = "eat-dinner";
  EXPECT_TRUE(Verify(s, RobberyKb()).passed());
}

TEST(Verify, ForbiddenActivityNamed) {
  auto r = Verify(JohnScenario(), RobberyKb());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule_id, "no-break-in");
  EXPECT_EQ(r.violations[0].entry, 2u);
}

TEST(Verify, CoverageGap) {
  auto s = JohnScenario();
  s.entries[2].instance.name = "eat-dinner";
  s.entries[2].instance.end_hour = 23;
  auto r = Verify(s, RobberyKb());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule_id, "alibi-window");
  EXPECT_FALSE(r.violations[0].entry);
}

TEST(Verify, PlaceholderIsIncomplete) {
  auto s = JohnScenario();
  s.entries[2].instance.name = "PH";
  EXPECT_THROW(Verify(s, RobberyKb()), Error);
}

TEST(Verify, ForbiddenObjectInDetails) {
  auto s = JohnScenario();
  s.entries[2].instance.name = "eat-dinner";
  Adr d;
  d.ada.object_name = "The Liffey";
  s.entries[2].details = d;
  auto r = Verify(s, RobberyKb());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule_id, "liffey-closed-sunday");
}

TEST(Verify, StructuralRules) {
  Scenario s;
  s.subject = testing::John();
  s.entries = {{Slot("work", Day::kMon, 16, 19, "downtown", Participants::kColleagues), {}},
               {Slot("eat-dinner", Day::kMon, 18, 20, "downtown", Participants::kAlone), {}},
               {Slot("sleep", Day::kMon, 1, 3, "home", Participants::kAlone), {}}};
  auto r = Verify(s, KnowledgeBase{});
  std::set<std::string> ids;
  for (const auto& v : r.violations) ids.insert(v.rule_id);
  EXPECT_EQ(ids, (std::set<std::string>{"structure.order", "structure.overlap"}));
}

TEST(Rules, Matching) {
  ForbidRule r{"r", "broke-into-*", DayClass::kWeekend, PartOfDay::kNight, "Downtown"};
  EXPECT_TRUE(RuleMatches(r, testing::RobberySlot("broke-into-house")));
  EXPECT_FALSE(RuleMatches(r, testing::RobberySlot("eat-dinner")));
  EXPECT_FALSE(RuleMatches(r, testing::RobberySlot()));
  auto weekday = testing::RobberySlot("broke-into-house");
  weekday.day = Day::kMon;
  EXPECT_FALSE(RuleMatches(r, weekday));
  auto kb = RobberyKb();
  EXPECT_TRUE(ObjectForbidden(kb, "the liffey", testing::RobberySlot()));
  auto monday = testing::RobberySlot();
  monday.day = Day::kMon;
  EXPECT_FALSE(ObjectForbidden(kb, "The Liffey", monday));
  auto names = ForbiddenNamesAt(kb, testing::RobberySlot(), {"eat-dinner", "broke-into-car"});
  EXPECT_EQ(names, (std::vector<std::string>{"broke-into-car"}));
}

TEST(KnowledgeBaseFile, Errors) {
  EXPECT_THROW(ParseKnowledgeBase(Json::parse(R"({"schema_version":1,"forbid_rules":[{"id":"a"},{"id":"a"}]})")),
               DatasetError);
  EXPECT_THROW(ParseKnowledgeBase(Json::parse(
                   R"({"schema_version":1,"require_rules":[{"id":"w","day":"sunday","start_hour":5,"end_hour":3}]})")),
               DatasetError);
  EXPECT_THROW(ParseKnowledgeBase(Json::parse(
                   R"({"schema_version":1,"forbid_rules":[{"id":"x","part_of_day":"dusk"}]})")),
               DatasetError);
  EXPECT_THROW(ParseKnowledgeBase(Json::parse(R"({"schema_version":1,"rules":[]})")),
               DatasetError);
}

}  // namespace
}  // namespace alibi
