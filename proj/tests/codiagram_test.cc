// Copyright 2026 The Clausekit Authors.
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

#include "clausekit/codiagram.h"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "test_support.h"

namespace clausekit {
namespace {

ClauseRow Row(std::string sent, Refinement ref, std::string verb) {
  ClauseRow r;
  r.sent_id = std::move(sent);
  r.refinement = ref;
  r.modality = Modality::kObligation;
  r.subject = "renter";
  r.verb = std::move(verb);
  return r;
}

const CoRefinement& Ref(const CoNode& n) {
  return *std::get<std::unique_ptr<CoRefinement>>(n);
}

TEST(BuildModel, SingleRowIsBareBox) {
  CoModel m = BuildModel({"d", {Row("1", Refinement::kNone, "pay")}});
  ASSERT_EQ(m.roots.size(), 1u);
  const CoBox& box = std::get<CoBox>(m.roots[0]);
  EXPECT_EQ(box.id, "d/s1/r1");
  EXPECT_EQ(box.agent, "renter");
  EXPECT_EQ(box.action_verb, "pay");
}

TEST(BuildModel, MixedOperatorsNestLeftAssociatively) {
  CoModel m = BuildModel({"d",
                          {Row("1", Refinement::kNone, "a"),
                           Row("1", Refinement::kAnd, "b"),
                           Row("1", Refinement::kOr, "c")}});
  ASSERT_EQ(m.roots.size(), 1u);
  const CoRefinement& top = Ref(m.roots[0]);
  EXPECT_EQ(top.op, Refinement::kOr);
  ASSERT_EQ(top.children.size(), 2u);
  const CoRefinement& inner = Ref(top.children[0]);
  EXPECT_EQ(inner.op, Refinement::kAnd);
  EXPECT_EQ(std::get<CoBox>(inner.children[0]).action_verb, "a");
  EXPECT_EQ(std::get<CoBox>(inner.children[1]).action_verb, "b");
  EXPECT_EQ(std::get<CoBox>(top.children[1]).action_verb, "c");
}

TEST(BuildModel, SameOperatorRunsShareOneNode) {
  CoModel m = BuildModel({"d",
                          {Row("1", Refinement::kNone, "a"),
                           Row("1", Refinement::kAnd, "b"),
                           Row("1", Refinement::kAnd, "c"),
                           Row("2", Refinement::kNone, "d")}});
  ASSERT_EQ(m.roots.size(), 2u);
  EXPECT_EQ(Ref(m.roots[0]).children.size(), 3u);
  EXPECT_EQ(std::get<CoBox>(m.roots[1]).id, "d/s2/r1");
}

TEST(BuildModel, FieldsMapIntoBox) {
  ClauseRow r = Row("1", Refinement::kNone, "return");
  r.object = "deposit";
  r.time = {{Anchor::kVerb, "within 10 days"}};
  r.conditions = {{Anchor::kObject, "30"}};
  r.adverbials = {{Anchor::kVerb, "in person"}};
  r.notes = {{Anchor::kObject, "on Facebook"}};
  CoModel m = BuildModel({"d", {r}});
  const CoBox& b = std::get<CoBox>(m.roots[0]);
  EXPECT_EQ(b.action_object, "deposit");
  EXPECT_EQ(b.time_guards, (std::vector<std::string>{"within 10 days"}));
  EXPECT_EQ(b.conditions, (std::vector<std::string>{"30"}));
  EXPECT_EQ(b.annotations,
            (std::vector<std::string>{"O: on Facebook", "V: in person"}));
}

TEST(BuildModel, RejectsInvalidTables) {
  EXPECT_THROW(BuildModel({"d", {Row("1", Refinement::kOr, "a")}}),
               InvariantError);
  EXPECT_THROW(BuildModel({"d",
                           {Row("1", Refinement::kNone, "a"),
                            Row("2", Refinement::kNone, "b"),
                            Row("1", Refinement::kNone, "c")}}),
               InvariantError);
}

TEST(BuildModel, GoldTableShape) {
  ClauseTable gold = testing::ReadTableData("table1_gold.csv");
  CoModel m = BuildModel(gold);
  EXPECT_EQ(m.roots.size(), 6u);
  EXPECT_EQ(LeafCount(m), gold.rows.size());
  EXPECT_EQ(Ref(m.roots[2]).op, Refinement::kOr);
  EXPECT_EQ(Ref(m.roots[2]).children.size(), 2u);
  EXPECT_EQ(Ref(m.roots[4]).op, Refinement::kAnd);
  EXPECT_EQ(Ref(m.roots[5]).op, Refinement::kAnd);
}

TEST(BuildModel, LeafCountEqualsRowCount) {
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    ClauseTable t = testing::RandomTable(rng);
    EXPECT_EQ(LeafCount(BuildModel(t)), t.rows.size());
  }
}

TEST(ExportModel, EmptyModel) {
  EXPECT_EQ(nlohmann::json::parse(ExportModel(BuildModel({"e", {}}))),
            nlohmann::json::parse(R"({"doc_id": "e", "roots": []})"));
}

TEST(ExportModel, StableAndOrdered) {
  ClauseTable gold = testing::ReadTableData("table1_gold.csv");
  std::string a = ExportModel(BuildModel(gold));
  std::string b = ExportModel(BuildModel(gold));
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["roots"][2]["kind"], "refinement");
  EXPECT_EQ(j["roots"][2]["operator"], "OR");
  EXPECT_EQ(j["roots"][2]["children"].size(), 2u);
  EXPECT_EQ(j["roots"][3]["agent"], "person");
  EXPECT_EQ(j["roots"][3]["conditions"][0], "one");
  EXPECT_LT(a.find("\"kind\""), a.find("\"id\""));
}

}  // namespace
}  // namespace clausekit
